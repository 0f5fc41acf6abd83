#ifndef LUEP_DISTANCE_HPP
#define LUEP_DISTANCE_HPP

#include <cstdint>
#include <utility>

#include "luep/linear_code.hpp"
#include "luep/types.hpp"

namespace luep {
namespace codes {

struct EnumerationOptions {
  // Hard cap on the number of codewords an exhaustive oracle will visit.
  // 2^26 covers the full (40,26) composite; anything larger is refused with
  // CapacityError rather than approximated.
  std::uint64_t max_codewords = std::uint64_t(1) << 26;
  // Worker threads for the enumeration; 0 means hardware concurrency.
  // Results are independent of the split.
  unsigned threads = 1;
};

// Exact minimum nonzero codeword weight of the code spanned by the rows of g,
// by Gray-code enumeration of all 2^rows combinations. Requires cols <= 64
// and independent rows (a dependent row set would silently halve the space).
int min_distance(ConstRefMat g, const EnumerationOptions& opts = {});
inline int min_distance(const LinearCode& c, const EnumerationOptions& opts = {}) {
  return min_distance(c.G, opts);
}

// A codeword attaining min_distance, as a packed row (bit j = position j).
std::uint64_t min_weight_codeword(ConstRefMat g,
                                  const EnumerationOptions& opts = {});

// Per-class separations of a two-class code whose first k_first generator
// rows form one message class and the rest the other. Entry i is the minimum
// weight over codewords whose class-i message part is nonzero, i.e. the
// guaranteed distance between transmissions that differ in class i.
// Returns (s_first, s_second).
std::pair<int, int> separation_vector(ConstRefMat g, Eigen::Index k_first,
                                      const EnumerationOptions& opts = {});

// Oracle arranged for the Plotkin layout: class order (s_high, s_low) =
// (msg2 rows, msg1 rows).
std::pair<int, int> separation_vector(const PlotkinCode& code,
                                      const EnumerationOptions& opts = {});

}  // namespace codes
}  // namespace luep

#endif  // LUEP_DISTANCE_HPP
