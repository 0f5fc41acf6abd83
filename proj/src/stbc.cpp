#include "luep/stbc.hpp"

#include <stdexcept>

namespace luep {
namespace stbc {

AlamoutiFrame alamouti_schedule(ConstRefSymbols f1, ConstRefSymbols f2,
                                Pairing pairing) {
  if (f1.size() != f2.size() || f1.size() == 0) {
    throw std::invalid_argument("alamouti_schedule: streams must match, nonempty");
  }
  AlamoutiFrame frame;
  frame.pairing = pairing;
  frame.node1_tx.resize(2 * f1.size());
  frame.node2_tx.resize(2 * f1.size());
  for (Eigen::Index k = 0; k < f1.size(); ++k) {
    const Eigen::Index a = frame.slot_a(k), b = frame.slot_b(k);
    frame.node1_tx[a] = f1[k];
    frame.node2_tx[a] = f2[k];
    frame.node1_tx[b] = -std::conj(f2[k]);
    frame.node2_tx[b] = std::conj(f1[k]);
  }
  return frame;
}

std::pair<SymbolFrame, SymbolFrame> alamouti_deschedule(
    const AlamoutiFrame& frame) {
  if (frame.node1_tx.size() != frame.node2_tx.size() ||
      frame.node1_tx.size() % 2 != 0 || frame.node1_tx.size() == 0) {
    throw std::invalid_argument("alamouti_deschedule: malformed frame");
  }
  const Eigen::Index m = frame.pairs();
  SymbolFrame f1(m), f2(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    f1[k] = frame.node1_tx[frame.slot_a(k)];
    f2[k] = frame.node2_tx[frame.slot_a(k)];
  }
  return {std::move(f1), std::move(f2)};
}

CombinedFrame mrc_combine(ConstRefSymbols y, const channel::CsiEstimate& csi,
                          Pairing pairing) {
  if (y.size() == 0 || y.size() % 2 != 0) {
    throw std::invalid_argument("mrc_combine: received frame must pair up");
  }
  if (csi.block_len < 1 || csi.blocks() * csi.block_len < y.size()) {
    throw std::invalid_argument("mrc_combine: CSI does not cover frame");
  }
  const Eigen::Index m = y.size() / 2;
  AlamoutiFrame geometry;  // for slot arithmetic only
  geometry.pairing = pairing;
  geometry.node1_tx.resize(y.size());

  CombinedFrame out;
  out.s1_tilde.resize(m);
  out.s2_tilde.resize(m);
  out.effective_gain.resize(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index a = geometry.slot_a(k), b = geometry.slot_b(k);
    if (csi.block_of(a) != csi.block_of(b)) {
      throw std::invalid_argument(
          "mrc_combine: pair spans two fading blocks; combining assumes the "
          "gains constant across each pair");
    }
    const Complex h1 = csi.gain1_at(a);
    const Complex h2 = csi.gain2_at(a);
    const Complex ya = y[a], yb = y[b];
    out.s1_tilde[k] = std::conj(h1) * ya + h2 * std::conj(yb);
    out.s2_tilde[k] = std::conj(h2) * ya - h1 * std::conj(yb);
    out.effective_gain[k] = std::norm(h1) + std::norm(h2);
  }
  return out;
}

}  // namespace stbc
}  // namespace luep
