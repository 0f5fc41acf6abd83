#include "luep/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "luep/rng.hpp"

namespace luep {
namespace channel {

SymbolFrame awgn(ConstRefSymbols x, const NoiseParams& noise,
                 std::mt19937_64& eng) {
  if (noise.sigma2 < 0) throw std::invalid_argument("awgn: sigma2 < 0");
  if (noise.sigma2 == 0) return x;
  std::normal_distribution<double> gauss(0.0, std::sqrt(noise.sigma2));
  SymbolFrame y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double re = gauss(eng);
    const double im = gauss(eng);
    y[i] = x[i] + Complex(re, im);
  }
  return y;
}

SymbolFrame awgn(ConstRefSymbols x, const NoiseParams& noise,
                 std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return awgn(x, noise, eng);
}

ChannelRealization rayleigh_draw(Eigen::Index n_blocks, Eigen::Index block_len,
                                 std::mt19937_64& eng) {
  if (n_blocks < 1 || block_len < 1) {
    throw std::invalid_argument("rayleigh_draw: need n_blocks, block_len >= 1");
  }
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));  // E|h|^2 = 1
  ChannelRealization ch;
  ch.block_len = block_len;
  ch.h1.resize(n_blocks);
  ch.h2.resize(n_blocks);
  for (Eigen::Index b = 0; b < n_blocks; ++b) {
    const double r1 = gauss(eng), i1 = gauss(eng);
    const double r2 = gauss(eng), i2 = gauss(eng);
    ch.h1[b] = Complex(r1, i1);
    ch.h2[b] = Complex(r2, i2);
  }
  return ch;
}

ChannelRealization rayleigh_draw(Eigen::Index n_blocks, Eigen::Index block_len,
                                 std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return rayleigh_draw(n_blocks, block_len, eng);
}

ChannelRealization unit_gains(Eigen::Index n_slots) {
  if (n_slots < 1) throw std::invalid_argument("unit_gains: need n_slots >= 1");
  ChannelRealization ch;
  ch.block_len = n_slots;
  ch.h1 = Eigen::VectorXcd::Ones(1);
  ch.h2 = Eigen::VectorXcd::Ones(1);
  return ch;
}

CsiEstimate estimate_csi(const ChannelRealization& truth, double error_var,
                         std::mt19937_64& eng) {
  if (error_var < 0) throw std::invalid_argument("estimate_csi: error_var < 0");
  CsiEstimate csi;
  csi.block_len = truth.block_len;
  csi.error_var = error_var;
  csi.h1_hat = truth.h1;
  csi.h2_hat = truth.h2;
  if (error_var > 0) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(error_var / 2));
    for (Eigen::Index b = 0; b < truth.blocks(); ++b) {
      csi.h1_hat[b] += Complex(gauss(eng), gauss(eng));
      csi.h2_hat[b] += Complex(gauss(eng), gauss(eng));
    }
  }
  return csi;
}

CsiEstimate estimate_csi(const ChannelRealization& truth, double error_var,
                         std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return estimate_csi(truth, error_var, eng);
}

CsiEstimate perfect_csi(const ChannelRealization& truth) {
  CsiEstimate csi;
  csi.block_len = truth.block_len;
  csi.error_var = 0.0;
  csi.h1_hat = truth.h1;
  csi.h2_hat = truth.h2;
  return csi;
}

SymbolFrame apply_gains(const ChannelRealization& ch, ConstRefSymbols tx1,
                        ConstRefSymbols tx2) {
  if (tx1.size() != tx2.size()) {
    throw std::invalid_argument("apply_gains: frame length mismatch");
  }
  if (ch.block_len < 1 || ch.blocks() * ch.block_len < tx1.size()) {
    throw std::invalid_argument("apply_gains: realization does not cover frame");
  }
  SymbolFrame y(tx1.size());
  for (Eigen::Index t = 0; t < tx1.size(); ++t) {
    y[t] = ch.gain1_at(t) * tx1[t] + ch.gain2_at(t) * tx2[t];
  }
  return y;
}

namespace {

Eigen::VectorXcd expand(const Eigen::VectorXcd& per_block,
                        Eigen::Index block_len, Eigen::Index n_slots) {
  if (block_len < 1 || per_block.size() * block_len < n_slots) {
    throw std::invalid_argument("slot_gains: estimate does not cover frame");
  }
  Eigen::VectorXcd g(n_slots);
  for (Eigen::Index t = 0; t < n_slots; ++t) g[t] = per_block[t / block_len];
  return g;
}

}  // namespace

Eigen::VectorXcd slot_gains1(const CsiEstimate& csi, Eigen::Index n_slots) {
  return expand(csi.h1_hat, csi.block_len, n_slots);
}

Eigen::VectorXcd slot_gains2(const CsiEstimate& csi, Eigen::Index n_slots) {
  return expand(csi.h2_hat, csi.block_len, n_slots);
}

}  // namespace channel
}  // namespace luep
