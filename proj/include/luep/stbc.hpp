#ifndef LUEP_STBC_HPP
#define LUEP_STBC_HPP

#include <utility>

#include "luep/channel.hpp"
#include "luep/types.hpp"

namespace luep {
namespace stbc {

// Slot geometry of an Alamouti pair within the air frame. With `adjacent`,
// pair k occupies slots (2k, 2k+1); with `offset_n`, slots (k, k + pairs):
// each node sends its own stream during the first half of the frame and the
// partner's conjugate during the second.
enum class Pairing { adjacent, offset_n };

struct AlamoutiFrame {
  SymbolFrame node1_tx;  // length 2 * pairs
  SymbolFrame node2_tx;
  Pairing pairing = Pairing::offset_n;

  Eigen::Index pairs() const { return node1_tx.size() / 2; }
  Eigen::Index slot_a(Eigen::Index k) const {
    return pairing == Pairing::adjacent ? 2 * k : k;
  }
  Eigen::Index slot_b(Eigen::Index k) const {
    return pairing == Pairing::adjacent ? 2 * k + 1 : k + pairs();
  }
};

// Pair k of (f1, f2) becomes slot a: (s1, s2), slot b: (-s2*, s1*) on nodes
// (1, 2) respectively. Same air time and per-node energy as sending the two
// streams separately.
AlamoutiFrame alamouti_schedule(ConstRefSymbols f1, ConstRefSymbols f2,
                                Pairing pairing);

// Bookkeeping inverse of alamouti_schedule.
std::pair<SymbolFrame, SymbolFrame> alamouti_deschedule(
    const AlamoutiFrame& frame);

struct CombinedFrame {
  SymbolFrame s1_tilde;  // one entry per pair
  SymbolFrame s2_tilde;
  Eigen::VectorXd effective_gain;  // |h1_hat|^2 + |h2_hat|^2 per pair

  // Noise variance per real dimension after combining, given the on-air
  // variance: effective_gain[k] * sigma2.
};

// Per pair with received (y_a, y_b):
//   s1~ = h1^* y_a + h2 y_b^*,  s2~ = h2^* y_a - h1 y_b^*
// which, noiseless with perfect CSI, is (|h1|^2 + |h2|^2) s_i. Both pair
// slots must fall inside one fading block of the estimate.
CombinedFrame mrc_combine(ConstRefSymbols y, const channel::CsiEstimate& csi,
                          Pairing pairing);

}  // namespace stbc
}  // namespace luep

#endif  // LUEP_STBC_HPP
