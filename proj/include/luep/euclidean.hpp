#ifndef LUEP_EUCLIDEAN_HPP
#define LUEP_EUCLIDEAN_HPP

#include "luep/distance.hpp"
#include "luep/linear_code.hpp"
#include "luep/modem.hpp"

namespace luep {
namespace codes {

struct EuclideanSeparations {
  double s2;  // pairs differing in v2 only
  double s1;  // pairs differing in v1 only
};

// Minimum Euclidean distances between noiseless unit-gain superposed signal
// sequences over the mixing segment (the second codeword half, where both
// sources carry data). Measured there, the per-axis antipodal mapping gives
// s_i = sqrt(2 d_i) exactly; the first half would add another 2 per differing
// v1 bit on top, which is a property of the repetition, not of the signal
// set. Pairs at distance 0 (identical constituents) are excluded by
// definition.
//
// The enumeration walks every nonzero constituent codeword through the actual
// mapping; by linearity of the per-axis map this covers every pair in the
// class. Refuses with CapacityError when 2^k1 + 2^k2 exceeds the cap.
EuclideanSeparations euclidean_separations(const PlotkinCode& code,
                                           const modem::SignalSet& mapping,
                                           const EnumerationOptions& opts = {});

}  // namespace codes
}  // namespace luep

#endif  // LUEP_EUCLIDEAN_HPP
