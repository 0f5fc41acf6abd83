#include "luep/euclidean.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "luep/gf2.hpp"

namespace luep {
namespace codes {

namespace {

// Minimum over nonzero codewords of || mapped(cw) - mapped(0) ||^2 where the
// map sends bit b of the constituent to set[b] on its axis. Gray-code walk
// over the 2^k messages.
double min_mapped_sq(const BinaryMatrix& g,
                     const std::array<Complex, 2>& set) {
  const std::vector<std::uint64_t> rows = gf2_pack_rows(g);
  const double step_sq = std::norm(set[1] - set[0]);  // per differing slot
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t cw = 0;
  const std::uint64_t total = std::uint64_t(1) << g.rows();
  for (std::uint64_t i = 1; i < total; ++i) {
    cw ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (cw != 0) best = std::min(best, std::popcount(cw) * step_sq);
  }
  return best;
}

}  // namespace

EuclideanSeparations euclidean_separations(const PlotkinCode& code,
                                           const modem::SignalSet& mapping,
                                           const EnumerationOptions& opts) {
  const Eigen::Index k1 = code.k1(), k2 = code.k2();
  if (k1 >= 62 || k2 >= 62 ||
      (std::uint64_t(1) << k1) + (std::uint64_t(1) << k2) > opts.max_codewords) {
    throw CapacityError("euclidean_separations: 2^" + std::to_string(k1) +
                        " + 2^" + std::to_string(k2) +
                        " codewords exceeds the enumeration cap");
  }
  if (code.c1.n > 64) {
    throw std::invalid_argument("euclidean_separations: constituent too long");
  }
  EuclideanSeparations sep;
  sep.s1 = std::sqrt(min_mapped_sq(code.c1.G, mapping.set1));
  sep.s2 = std::sqrt(min_mapped_sq(code.c2.G, mapping.set2));
  return sep;
}

}  // namespace codes
}  // namespace luep
