#ifndef LUEP_BP_HPP
#define LUEP_BP_HPP

#include "luep/linear_code.hpp"
#include "luep/tanner.hpp"
#include "luep/types.hpp"

namespace luep {
namespace decoder {

struct BpOptions {
  int max_iter = 50;
  // Check-to-variable messages are clipped to this magnitude; together with
  // the tanh-domain clamp it keeps every quantity finite without changing
  // decisions.
  double clip = 25.0;
};

struct BpResult {
  BitVector codeword;
  bool converged = false;
  int iterations = 0;  // 0 = the channel hard decision already satisfied H
};

// Flooding log-domain sum-product. The syndrome is checked on the channel
// hard decision before the first iteration and after every iteration; the
// decoder stops early on a zero syndrome. A hard-decision tie (posterior
// exactly 0) resolves to bit 0. Non-converged results still carry the final
// hard decision.
BpResult bp_decode(const TannerGraph& graph, ConstRefLlr llr,
                   const BpOptions& opts = {});

struct DecodeResult {
  BitVector codeword;
  bool converged = false;
  int iterations = 0;
  BitVector msg1;
  BitVector msg2;
};

// bp_decode plus positional message extraction for the composite code.
DecodeResult decode_frame(const codes::PlotkinCode& code,
                          const TannerGraph& graph, ConstRefLlr llr,
                          const BpOptions& opts = {});

}  // namespace decoder
}  // namespace luep

#endif  // LUEP_BP_HPP
