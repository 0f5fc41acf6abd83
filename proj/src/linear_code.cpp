#include "luep/linear_code.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "luep/distance.hpp"
#include "luep/gf2.hpp"

namespace luep {
namespace codes {

namespace {

void check_entries(ConstRefMat m, const char* what) {
  if ((m.array() > 1).any()) {
    throw std::invalid_argument(std::string(what) + ": entries must be 0 or 1");
  }
}

}  // namespace

void validate(const LinearCode& code) {
  if (code.n < 2 || code.k < 1 || code.k >= code.n) {
    throw std::invalid_argument("LinearCode: need 1 <= k < n, n >= 2");
  }
  if (code.G.rows() != code.k || code.G.cols() != code.n) {
    throw std::invalid_argument("LinearCode: G is not k x n");
  }
  if (code.H.rows() != code.n - code.k || code.H.cols() != code.n) {
    throw std::invalid_argument("LinearCode: H is not (n-k) x n");
  }
  check_entries(code.G, "LinearCode G");
  check_entries(code.H, "LinearCode H");
  if (!gf2_is_zero(gf2_mul(code.G, code.H.transpose()))) {
    throw std::invalid_argument("LinearCode: G * H^T != 0");
  }
  if (gf2_rank(code.G) != code.k) {
    throw std::invalid_argument("LinearCode: G is rank deficient");
  }
  if (gf2_rank(code.H) != code.n - code.k) {
    throw std::invalid_argument("LinearCode: H is rank deficient");
  }
}

LinearCode spc_code(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("spc_code: need n >= 2");
  LinearCode code;
  code.n = n;
  code.k = n - 1;
  code.G = BinaryMatrix::Zero(n - 1, n);
  code.G.leftCols(n - 1) = gf2_identity(n - 1);
  code.G.col(n - 1).setOnes();
  code.H = BinaryMatrix::Ones(1, n);
  code.d = 2;
  return code;
}

LinearCode repetition_code(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("repetition_code: need n >= 2");
  LinearCode code;
  code.n = n;
  code.k = 1;
  code.G = BinaryMatrix::Ones(1, n);
  code.H = BinaryMatrix::Zero(n - 1, n);
  code.H.leftCols(n - 1) = gf2_identity(n - 1);
  code.H.col(n - 1).setOnes();
  code.d = static_cast<int>(n);
  return code;
}

namespace {

// Unbiased bounded draw straight from the engine words, so generated codes do
// not depend on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound) {
  std::uint64_t x, r;
  do {
    x = eng();
    r = x % bound;
  } while (x - r > std::uint64_t(0) - bound);
  return r;
}

// First `weight` entries of a partial Fisher-Yates shuffle of 0..m-1.
std::vector<Eigen::Index> sample_rows(std::mt19937_64& eng, Eigen::Index m,
                                      int weight) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), Eigen::Index(0));
  for (int t = 0; t < weight; ++t) {
    const auto j = t + static_cast<Eigen::Index>(
                           uniform_below(eng, std::uint64_t(m - t)));
    std::swap(idx[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(weight));
  return idx;
}

bool columns_distinct(ConstRefMat h) {
  const auto cols = gf2_pack_rows(h.transpose());
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      if (cols[a] == cols[b]) return false;
    }
  }
  return true;
}

}  // namespace

LinearCode code_from_parity(ConstRefMat h, int known_d) {
  const Eigen::Index m = h.rows(), n = h.cols();
  if (m < 1 || n < 2 || m >= n) {
    throw std::invalid_argument("code_from_parity: need 1 <= rows < cols");
  }
  check_entries(h, "code_from_parity");
  const Eigen::Index k = n - m;
  if (gf2_rank(h) != m) {
    throw std::invalid_argument("code_from_parity: H is rank deficient");
  }
  BinaryMatrix c = h.rightCols(m);
  BinaryMatrix c_inv;
  try {
    c_inv = gf2_inverse(c);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "code_from_parity: trailing square block of H is singular");
  }
  const BinaryMatrix p = gf2_mul(c_inv, h.leftCols(k));  // m x k
  LinearCode code;
  code.n = n;
  code.k = k;
  code.G = BinaryMatrix::Zero(k, n);
  code.G.leftCols(k) = gf2_identity(k);
  code.G.rightCols(m) = p.transpose();
  code.H = h;
  code.d = known_d;
  return code;
}

LinearCode gallager_ldpc(Eigen::Index n, Eigen::Index k, int target_d,
                         std::uint64_t seed, const GallagerOptions& opts) {
  if (k < 1 || k >= n) throw std::invalid_argument("gallager_ldpc: need 0 < k < n");
  if (target_d < 1 || opts.column_weight < 1 || opts.max_attempts < 1) {
    throw std::invalid_argument("gallager_ldpc: bad options");
  }
  const Eigen::Index m = n - k;
  // Fixed column weight w needs m > w to leave room for full rank; small m
  // falls back to uniformly random nonzero columns.
  const bool fixed_weight = m > opts.column_weight;

  std::mt19937_64 eng(seed);
  EnumerationOptions enum_opts;
  for (long attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    BinaryMatrix h = BinaryMatrix::Zero(m, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (fixed_weight) {
        for (Eigen::Index r : sample_rows(eng, m, opts.column_weight)) h(r, j) = 1;
      } else {
        const std::uint64_t pattern =
            1 + uniform_below(eng, (std::uint64_t(1) << m) - 1);
        for (Eigen::Index r = 0; r < m; ++r) h(r, j) = Bit((pattern >> r) & 1);
      }
    }
    if (target_d >= 3 && !columns_distinct(h)) continue;  // d <= 2 otherwise
    if (gf2_rank(h) != m) continue;

    const std::vector<Eigen::Index> pivots = gf2_pivot_columns(h);
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    // Non-pivot columns first, pivots last; within each group keep order.
    std::vector<Eigen::Index> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_pivot[static_cast<std::size_t>(j)]) perm.push_back(j);
    }
    for (Eigen::Index p : pivots) perm.push_back(p);

    BinaryMatrix h_perm(m, n);
    for (Eigen::Index j = 0; j < n; ++j) h_perm.col(j) = h.col(perm[static_cast<std::size_t>(j)]);

    LinearCode code = code_from_parity(h_perm);
    if (min_distance(code.G, enum_opts) != target_d) continue;
    code.d = target_d;
    return code;
  }
  throw std::runtime_error(
      "gallager_ldpc: no (" + std::to_string(n) + "," + std::to_string(k) +
      ") matrix with distance " + std::to_string(target_d) + " found in " +
      std::to_string(opts.max_attempts) + " attempts");
}

PlotkinCode plotkin_combine(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n != c2.n) {
    throw std::invalid_argument("plotkin_combine: constituent lengths differ");
  }
  validate(c1);
  validate(c2);
  const Eigen::Index n = c1.n, k1 = c1.k, k2 = c2.k;

  PlotkinCode code;
  code.c1 = c1;
  code.c2 = c2;
  code.inner.n = 2 * n;
  code.inner.k = k1 + k2;

  BinaryMatrix& g = code.inner.G;
  g = BinaryMatrix::Zero(k1 + k2, 2 * n);
  g.topLeftCorner(k1, n) = c1.G;
  g.topRightCorner(k1, n) = c1.G;
  g.bottomRightCorner(k2, n) = c2.G;

  BinaryMatrix& h = code.inner.H;
  h = BinaryMatrix::Zero(2 * n - k1 - k2, 2 * n);
  h.topLeftCorner(n - k1, n) = c1.H;
  h.bottomLeftCorner(n - k2, n) = c2.H;
  h.bottomRightCorner(n - k2, n) = c2.H;

  if (c1.distance_known() && c2.distance_known()) {
    code.inner.d = std::min(2 * c1.d, c2.d);
    code.separation = {c2.d, 2 * c1.d};
    code.luep_condition = 2 * c1.d < c2.d;
  }
  return code;
}

Encoding encode(const PlotkinCode& code, ConstRefBits msg2, ConstRefBits msg1) {
  if (msg2.size() != code.k2() || msg1.size() != code.k1()) {
    throw std::invalid_argument("encode: message lengths must be (k2, k1)");
  }
  Encoding enc;
  enc.v1 = gf2_mul_row(msg1, code.c1.G);
  enc.v2 = gf2_mul_row(msg2, code.c2.G);
  enc.codeword.resize(2 * code.n());
  enc.codeword.head(code.n()) = enc.v1;
  enc.codeword.tail(code.n()) = gf2_add(enc.v1, enc.v2);
  return enc;
}

std::pair<BitVector, BitVector> extract_messages(const PlotkinCode& code,
                                                 ConstRefBits codeword) {
  const Eigen::Index n = code.n();
  if (codeword.size() != 2 * n) {
    throw std::invalid_argument("extract_messages: codeword length != 2n");
  }
  const BitVector v1 = codeword.head(n);
  const BitVector v2 = gf2_add(v1, codeword.tail(n));
  return {v2.head(code.k2()), v1.head(code.k1())};
}

}  // namespace codes
}  // namespace luep
