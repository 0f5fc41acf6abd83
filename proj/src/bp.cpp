#include "luep/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace luep {
namespace decoder {

namespace {

bool syndrome_zero(const TannerGraph& g, const std::vector<Bit>& hard) {
  for (const auto& vars : g.check_vars) {
    Bit parity = 0;
    for (int v : vars) parity ^= hard[static_cast<std::size_t>(v)];
    if (parity) return false;
  }
  return true;
}

void hard_decide(const std::vector<double>& posterior, std::vector<Bit>& hard) {
  for (std::size_t v = 0; v < posterior.size(); ++v) {
    hard[v] = posterior[v] < 0 ? Bit(1) : Bit(0);  // tie resolves to 0
  }
}

}  // namespace

BpResult bp_decode(const TannerGraph& graph, ConstRefLlr llr,
                   const BpOptions& opts) {
  if (llr.size() != graph.variable_count) {
    throw std::invalid_argument("bp_decode: LLR length != variable count");
  }
  if (opts.max_iter < 1) throw std::invalid_argument("bp_decode: max_iter < 1");

  const std::size_t nv = static_cast<std::size_t>(graph.variable_count);
  std::vector<double> posterior(nv);
  for (std::size_t v = 0; v < nv; ++v) posterior[v] = llr[static_cast<Eigen::Index>(v)];
  std::vector<Bit> hard(nv);
  hard_decide(posterior, hard);

  BpResult res;
  if (syndrome_zero(graph, hard)) {
    res.converged = true;
    res.iterations = 0;
    res.codeword = Eigen::Map<const BitVector>(hard.data(), llr.size());
    return res;
  }

  std::vector<double> msg_vc(graph.edge_count);  // variable -> check
  std::vector<double> msg_cv(graph.edge_count, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (int e : graph.var_edges[v]) {
      msg_vc[static_cast<std::size_t>(e)] = posterior[v];
    }
  }

  std::vector<double> tanh_buf, fwd;
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    // Check update, tanh rule via prefix/suffix products (no division, so a
    // saturated incoming message cannot poison the others).
    for (std::size_t c = 0; c < graph.check_edges.size(); ++c) {
      const auto& edges = graph.check_edges[c];
      const std::size_t deg = edges.size();
      tanh_buf.resize(deg);
      fwd.resize(deg + 1);
      fwd[0] = 1.0;
      for (std::size_t t = 0; t < deg; ++t) {
        tanh_buf[t] = std::tanh(0.5 * msg_vc[static_cast<std::size_t>(edges[t])]);
        fwd[t + 1] = fwd[t] * tanh_buf[t];
      }
      double suffix = 1.0;
      for (std::size_t t = deg; t-- > 0;) {
        double prod = fwd[t] * suffix;
        prod = std::clamp(prod, -(1.0 - 1e-14), 1.0 - 1e-14);
        const double m = std::clamp(2.0 * std::atanh(prod), -opts.clip, opts.clip);
        msg_cv[static_cast<std::size_t>(edges[t])] = m;
        suffix *= tanh_buf[t];
      }
    }

    // Variable update and posterior.
    for (std::size_t v = 0; v < nv; ++v) {
      double total = llr[static_cast<Eigen::Index>(v)];
      for (int e : graph.var_edges[v]) total += msg_cv[static_cast<std::size_t>(e)];
      posterior[v] = total;
      for (int e : graph.var_edges[v]) {
        msg_vc[static_cast<std::size_t>(e)] = total - msg_cv[static_cast<std::size_t>(e)];
      }
    }

    hard_decide(posterior, hard);
    if (syndrome_zero(graph, hard)) {
      res.converged = true;
      res.iterations = iter;
      res.codeword = Eigen::Map<const BitVector>(hard.data(), llr.size());
      return res;
    }
  }

  res.converged = false;
  res.iterations = opts.max_iter;
  res.codeword = Eigen::Map<const BitVector>(hard.data(), llr.size());
  return res;
}

DecodeResult decode_frame(const codes::PlotkinCode& code,
                          const TannerGraph& graph, ConstRefLlr llr,
                          const BpOptions& opts) {
  BpResult bp = bp_decode(graph, llr, opts);
  DecodeResult res;
  res.codeword = std::move(bp.codeword);
  res.converged = bp.converged;
  res.iterations = bp.iterations;
  auto [msg2, msg1] = codes::extract_messages(code, res.codeword);
  res.msg1 = std::move(msg1);
  res.msg2 = std::move(msg2);
  return res;
}

}  // namespace decoder
}  // namespace luep
