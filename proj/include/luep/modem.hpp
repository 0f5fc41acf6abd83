#ifndef LUEP_MODEM_HPP
#define LUEP_MODEM_HPP

#include <array>
#include <iosfwd>
#include <utility>

#include "luep/types.hpp"

namespace luep {
namespace modem {

// Sidon-partitioned QPSK: source 1 signals on the in-phase axis, source 2 on
// the quadrature axis, so every superposed point (+-1 +- j)/sqrt(2) decomposes
// uniquely. Bit convention throughout: b -> (1 - 2b)/sqrt(2), bit 0 positive.
struct SignalSet {
  std::array<Complex, 2> set1;  // indexed by the source-1 bit
  std::array<Complex, 2> set2;  // indexed by the source-2 bit
};

SignalSet qpsk_sidon();

// Per-source symbol energy is 1/2; a superposed symbol has unit energy.
double bit_amplitude(Bit b);

// One symbol per bit on the in-phase / quadrature axis.
SymbolFrame map_i(ConstRefBits bits);
SymbolFrame map_q(ConstRefBits bits);

// The two source-node transmissions for one composite codeword:
// source 1 sends v1 twice, source 2 sends mapped zeros (pilots) then v2.
// Both frames have length 2n.
std::pair<SymbolFrame, SymbolFrame> map_sources(ConstRefBits v1,
                                                ConstRefBits v2);

// Elementwise g1*f1 + g2*f2; the over-the-air sum seen by one antenna.
SymbolFrame superpose(ConstRefSymbols f1, ConstRefSymbols f2, Complex g1,
                      Complex g2);

struct DemapOptions {
  bool max_log = false;  // max-log approximation instead of exact log-sum-exp
};

// Exact bit metrics for one mixing-phase symbol: 4 hypotheses over
// (u, v2) with w = u XOR v2 the code bit at that position. noise_var is the
// per-real-dimension variance (N0/2); likelihood exponent is
// -|y - m|^2 / (2 noise_var).
struct MixedLlrs {
  double u;
  double w;
  double v2;
};
MixedLlrs mixed_symbol_llrs(Complex y, Complex g1, Complex g2,
                            double noise_var, const DemapOptions& opts = {});

// First-half symbol: the source-2 bit is the known zero pilot, leaving two
// hypotheses on u.
double pilot_symbol_llr(Complex y, Complex g1, Complex g2, double noise_var);

// Full-frame demap for the superposed transmission. y has length 2n; slot i
// informs u_i (pilot phase), slot n+i informs (u_i, w_i) jointly. Output is
// indexed like the codeword: LLR(u_i) at i (both contributions summed),
// LLR(w_i) at n+i. Positive means bit 0.
LlrFrame demap(ConstRefSymbols y, ConstRefSymbols g1, ConstRefSymbols g2,
               double noise_var, const DemapOptions& opts = {});
LlrFrame demap(ConstRefSymbols y, Complex g1, Complex g2, double noise_var,
               const DemapOptions& opts = {});

// Demap after maximum ratio combining: per pair k the combined outputs are
// s1t[k] ~ gain[k]*x1 and s2t[k] ~ gain[k]*x2 with noise variance
// gain[k]*noise_var per real dimension. Hypotheses are joint over (u_k, w_k)
// exactly as in the mixing-phase kernel, but over the two separated
// observations. Output layout matches demap.
LlrFrame demap_mrc(ConstRefSymbols s1t, ConstRefSymbols s2t,
                   const Eigen::VectorXd& gain, double noise_var,
                   const DemapOptions& opts = {});

// Debug serialization, one "re,im" line per symbol.
void write_symbols_csv(std::ostream& out, ConstRefSymbols frame);

}  // namespace modem
}  // namespace luep

#endif  // LUEP_MODEM_HPP
