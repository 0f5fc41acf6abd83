#include "luep/gf2.hpp"

#include <stdexcept>

namespace luep {

namespace {

void check_bits(ConstRefMat m) {
  if ((m.array() > 1).any()) {
    throw std::invalid_argument("gf2: entries must be 0 or 1");
  }
}

}  // namespace

BinaryMatrix gf2_mul(ConstRefMat a, ConstRefMat b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("gf2_mul: dimension mismatch");
  }
  check_bits(a);
  check_bits(b);
  Eigen::MatrixXi prod = a.cast<int>() * b.cast<int>();
  return prod.unaryExpr([](int x) { return Bit(x & 1); });
}

BitVector gf2_mul_row(ConstRefBits v, ConstRefMat m) {
  BinaryMatrix row = gf2_mul(ConstRefMat(v), m);
  return row.row(0);
}

BinaryMatrix gf2_identity(Eigen::Index n) {
  BinaryMatrix m = BinaryMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool gf2_is_zero(ConstRefMat m) { return !(m.array() != 0).any(); }

namespace {

// Row-reduce a copy, scanning for pivots in columns [0, col_limit) only;
// optionally record pivot columns.
int eliminate(BinaryMatrix& w, Eigen::Index col_limit,
              std::vector<Eigen::Index>* pivots) {
  const Eigen::Index rows = w.rows();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < col_limit && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (w(i, c)) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    w.row(p).swap(w.row(r));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && w(i, c)) {
        w.row(i) = (w.row(i) + w.row(r)).unaryExpr([](Bit x) { return Bit(x & 1); });
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int gf2_rank(ConstRefMat m) {
  check_bits(m);
  BinaryMatrix w = m;
  return eliminate(w, w.cols(), nullptr);
}

std::vector<Eigen::Index> gf2_pivot_columns(ConstRefMat m) {
  check_bits(m);
  BinaryMatrix w = m;
  std::vector<Eigen::Index> pivots;
  eliminate(w, w.cols(), &pivots);
  return pivots;
}

BinaryMatrix gf2_inverse(ConstRefMat m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("gf2_inverse: matrix not square");
  }
  check_bits(m);
  const Eigen::Index n = m.rows();
  BinaryMatrix w(n, 2 * n);
  w.leftCols(n) = m;
  w.rightCols(n) = gf2_identity(n);
  if (eliminate(w, n, nullptr) != n) {
    throw std::invalid_argument("gf2_inverse: matrix singular");
  }
  return w.rightCols(n);
}

std::vector<std::uint64_t> gf2_pack_rows(ConstRefMat m) {
  if (m.cols() > 64) {
    throw std::invalid_argument("gf2_pack_rows: more than 64 columns");
  }
  check_bits(m);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m.rows()), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::uint64_t w = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j)) w |= (1ull << j);
    }
    out[static_cast<std::size_t>(i)] = w;
  }
  return out;
}

BitVector gf2_unpack(std::uint64_t word, Eigen::Index n) {
  BitVector v(n);
  for (Eigen::Index j = 0; j < n; ++j) v[j] = Bit((word >> j) & 1);
  return v;
}

}  // namespace luep
