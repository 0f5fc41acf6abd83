#include <bit>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "luep/distance.hpp"
#include "luep/gf2.hpp"
#include "luep/linear_code.hpp"

using namespace luep;
using namespace luep::codes;

namespace {

// Direct reference enumeration, structured nothing like the Gray-code walk.
int naive_min_distance(ConstRefMat g) {
  const Eigen::Index k = g.rows();
  int best = 1 << 30;
  for (std::uint64_t msg = 1; msg < (std::uint64_t(1) << k); ++msg) {
    BitVector m = gf2_unpack(msg, k);
    BitVector cw = gf2_mul_row(m, g);
    int w = cw.cast<int>().sum();
    if (w < best) best = w;
  }
  return best;
}

std::pair<int, int> naive_separation(ConstRefMat g, Eigen::Index k_first) {
  const Eigen::Index k = g.rows();
  int s1 = 1 << 30, s2 = 1 << 30;
  for (std::uint64_t msg = 1; msg < (std::uint64_t(1) << k); ++msg) {
    BitVector m = gf2_unpack(msg, k);
    int w = gf2_mul_row(m, g).cast<int>().sum();
    if (m.head(k_first).any() && w < s1) s1 = w;
    if (m.tail(k - k_first).any() && w < s2) s2 = w;
  }
  return {s1, s2};
}

BinaryMatrix random_full_rank(std::mt19937_64& eng, Eigen::Index k,
                              Eigen::Index n) {
  BinaryMatrix g(k, n);
  g.leftCols(k) = gf2_identity(k);
  g.rightCols(n - k) =
      BinaryMatrix::NullaryExpr(k, n - k, [&]() { return Bit(eng() & 1); });
  return g;
}

}  // namespace

TEST_CASE("known distances") {
  CHECK(min_distance(spc_code(8)) == 2);
  CHECK(min_distance(repetition_code(9)) == 9);
  PlotkinCode toy = plotkin_combine(spc_code(8), repetition_code(8));
  CHECK(min_distance(toy.inner) == 4);
}

TEST_CASE("gray walk agrees with direct enumeration") {
  std::mt19937_64 eng(31);
  for (int trial = 0; trial < 25; ++trial) {
    BinaryMatrix g = random_full_rank(eng, 6, 14);
    CHECK(min_distance(g) == naive_min_distance(g));
    auto got = separation_vector(g, 2);
    CHECK(got == naive_separation(g, 2));
  }
}

TEST_CASE("separation vector of the toy composite") {
  PlotkinCode toy = plotkin_combine(spc_code(8), repetition_code(8));
  auto [s_high, s_low] = separation_vector(toy);
  CHECK(s_high == 8);
  CHECK(s_low == 4);
  // Raw orientation: first class = the k1 generator rows.
  auto raw = separation_vector(toy.inner.G, toy.k1());
  CHECK(raw.first == 4);
  CHECK(raw.second == 8);
}

TEST_CASE("min_weight_codeword returns an attaining codeword") {
  PlotkinCode toy = plotkin_combine(spc_code(8), repetition_code(8));
  std::uint64_t cw = min_weight_codeword(toy.inner.G);
  CHECK(std::popcount(cw) == 4);
  BitVector v = gf2_unpack(cw, 16);
  CHECK(gf2_is_zero(ConstRefMat(gf2_mul_row(v, toy.inner.H.transpose()))));
}

TEST_CASE("enumeration is independent of the thread split") {
  PlotkinCode toy = plotkin_combine(spc_code(8), repetition_code(8));
  EnumerationOptions one, three;
  one.threads = 1;
  three.threads = 3;
  CHECK(min_distance(toy.inner.G, one) == min_distance(toy.inner.G, three));
  CHECK(min_weight_codeword(toy.inner.G, one) ==
        min_weight_codeword(toy.inner.G, three));
  CHECK(separation_vector(toy.inner.G, 7, one) ==
        separation_vector(toy.inner.G, 7, three));
}

TEST_CASE("composition distance and class separations on small pairs") {
  // min(2*d1, d2) gives the distance for every pair. The class separations
  // are (d2, 2*d1) only when 2*d1 <= d2: outside that regime a nonzero v1
  // can pair with a nearby v2 and the low class dips below 2*d1.
  auto measure = [](const LinearCode& a, const LinearCode& b) {
    PlotkinCode code = plotkin_combine(a, b);
    CHECK(min_distance(code.inner) == std::min(2 * a.d, b.d));
    auto sep = separation_vector(code);
    CHECK(sep.first == b.d);  // v1 = 0 attains d2, nothing goes lower
    return sep;
  };
  SUBCASE("inside the protection regime the formula is exact") {
    CHECK(measure(spc_code(4), repetition_code(4)) == std::pair(4, 4));
    CHECK(measure(spc_code(6), repetition_code(6)) == std::pair(6, 4));
  }
  SUBCASE("outside it the low class collapses") {
    // v2 = v1 cancels the second block entirely: weight w(v1) = 2.
    CHECK(measure(spc_code(6), spc_code(6)) == std::pair(2, 2));
    // v2 of weight 4 overlaps the all-ones v1 down to 5 + 1 = 6.
    CHECK(measure(repetition_code(5), spc_code(5)) == std::pair(2, 6));
  }
}

TEST_CASE("capacity and rank guards") {
  std::mt19937_64 eng(41);
  BinaryMatrix big = random_full_rank(eng, 11, 16);
  EnumerationOptions tight;
  tight.max_codewords = 1u << 10;
  CHECK_THROWS_AS(min_distance(big, tight), CapacityError);
  EnumerationOptions exact;
  exact.max_codewords = 1u << 11;  // equality is allowed
  CHECK(min_distance(big, exact) == naive_min_distance(big));

  BinaryMatrix dep(2, 3);
  dep << 1, 1, 0, 1, 1, 0;
  CHECK_THROWS_AS(min_distance(dep), std::invalid_argument);

  BinaryMatrix wide(2, 70);
  wide.setZero();
  wide(0, 0) = 1;
  wide(1, 1) = 1;
  CHECK_THROWS_AS(min_distance(wide), std::invalid_argument);
}
