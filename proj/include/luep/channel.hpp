#ifndef LUEP_CHANNEL_HPP
#define LUEP_CHANNEL_HPP

#include <cstdint>
#include <random>

#include "luep/types.hpp"

namespace luep {
namespace channel {

// noise variance N0/2 per real dimension; this is the single variance
// convention used everywhere downstream (demapper exponents, MRC scaling).
struct NoiseParams {
  double sigma2 = 0.0;
};

// Per-source complex gains, constant over blocks of block_len symbols.
// Entry b of h1/h2 applies to slots [b*block_len, (b+1)*block_len).
struct ChannelRealization {
  Eigen::Index block_len = 0;
  Eigen::VectorXcd h1;
  Eigen::VectorXcd h2;

  Eigen::Index blocks() const { return h1.size(); }
  Eigen::Index block_of(Eigen::Index slot) const { return slot / block_len; }
  Complex gain1_at(Eigen::Index slot) const { return h1[block_of(slot)]; }
  Complex gain2_at(Eigen::Index slot) const { return h2[block_of(slot)]; }
};

struct CsiEstimate {
  Eigen::Index block_len = 0;
  Eigen::VectorXcd h1_hat;
  Eigen::VectorXcd h2_hat;
  double error_var = 0.0;

  Eigen::Index blocks() const { return h1_hat.size(); }
  Eigen::Index block_of(Eigen::Index slot) const { return slot / block_len; }
  Complex gain1_at(Eigen::Index slot) const { return h1_hat[block_of(slot)]; }
  Complex gain2_at(Eigen::Index slot) const { return h2_hat[block_of(slot)]; }
};

// Adds i.i.d. Gaussian noise, variance sigma2 per real dimension. sigma2 = 0
// returns the input untouched (and consumes no engine draws).
SymbolFrame awgn(ConstRefSymbols x, const NoiseParams& noise,
                 std::mt19937_64& eng);
SymbolFrame awgn(ConstRefSymbols x, const NoiseParams& noise,
                 std::uint64_t seed);

// i.i.d. circularly symmetric complex Gaussian gains with E|h|^2 = 1, drawn
// per source per block. Draw order per block: h1 then h2, real then imaginary.
ChannelRealization rayleigh_draw(Eigen::Index n_blocks, Eigen::Index block_len,
                                 std::mt19937_64& eng);
ChannelRealization rayleigh_draw(Eigen::Index n_blocks, Eigen::Index block_len,
                                 std::uint64_t seed);

// All-ones gains: the AWGN path expressed as a degenerate realization.
ChannelRealization unit_gains(Eigen::Index n_slots);

// h_hat = h + e with e complex Gaussian of total variance error_var,
// independent per gain per block. error_var = 0 copies the truth exactly.
CsiEstimate estimate_csi(const ChannelRealization& truth, double error_var,
                         std::mt19937_64& eng);
CsiEstimate estimate_csi(const ChannelRealization& truth, double error_var,
                         std::uint64_t seed);

CsiEstimate perfect_csi(const ChannelRealization& truth);

// Per-slot h1*tx1 + h2*tx2, no noise. Serves both the superposed transmission
// (tx = the two source frames) and the Alamouti schedule (tx = the two node
// sequences).
SymbolFrame apply_gains(const ChannelRealization& ch, ConstRefSymbols tx1,
                        ConstRefSymbols tx2);

// Gain estimates expanded to one entry per slot, for the demapper.
Eigen::VectorXcd slot_gains1(const CsiEstimate& csi, Eigen::Index n_slots);
Eigen::VectorXcd slot_gains2(const CsiEstimate& csi, Eigen::Index n_slots);

}  // namespace channel
}  // namespace luep

#endif  // LUEP_CHANNEL_HPP
