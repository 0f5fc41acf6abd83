#include "luep/modem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace luep {
namespace modem {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double lse(double a, double b) {  // log(e^a + e^b), overflow-safe
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(-std::abs(a - b)));
}

void check_noise(double noise_var) {
  if (!(noise_var > 0)) {
    throw std::invalid_argument("demap: noise_var must be positive");
  }
}

}  // namespace

double bit_amplitude(Bit b) { return b ? -kInvSqrt2 : kInvSqrt2; }

SignalSet qpsk_sidon() {
  SignalSet s;
  s.set1 = {Complex(kInvSqrt2, 0), Complex(-kInvSqrt2, 0)};
  s.set2 = {Complex(0, kInvSqrt2), Complex(0, -kInvSqrt2)};
  return s;
}

SymbolFrame map_i(ConstRefBits bits) {
  SymbolFrame f(bits.size());
  for (Eigen::Index i = 0; i < bits.size(); ++i) {
    f[i] = Complex(bit_amplitude(bits[i]), 0);
  }
  return f;
}

SymbolFrame map_q(ConstRefBits bits) {
  SymbolFrame f(bits.size());
  for (Eigen::Index i = 0; i < bits.size(); ++i) {
    f[i] = Complex(0, bit_amplitude(bits[i]));
  }
  return f;
}

std::pair<SymbolFrame, SymbolFrame> map_sources(ConstRefBits v1,
                                                ConstRefBits v2) {
  if (v1.size() != v2.size()) {
    throw std::invalid_argument("map_sources: length mismatch");
  }
  const Eigen::Index n = v1.size();
  SymbolFrame f1(2 * n), f2(2 * n);
  f1.head(n) = map_i(v1);
  f1.tail(n) = f1.head(n);
  f2.head(n) = SymbolFrame::Constant(n, Complex(0, kInvSqrt2));  // mapped zeros
  f2.tail(n) = map_q(v2);
  return {std::move(f1), std::move(f2)};
}

SymbolFrame superpose(ConstRefSymbols f1, ConstRefSymbols f2, Complex g1,
                      Complex g2) {
  if (f1.size() != f2.size()) {
    throw std::invalid_argument("superpose: length mismatch");
  }
  return g1 * f1 + g2 * f2;
}

MixedLlrs mixed_symbol_llrs(Complex y, Complex g1, Complex g2,
                            double noise_var, const DemapOptions& opts) {
  check_noise(noise_var);
  const double inv = 1.0 / (2.0 * noise_var);
  // t[u][v2]
  double t[2][2];
  for (int u = 0; u < 2; ++u) {
    for (int v2 = 0; v2 < 2; ++v2) {
      const Complex m = g1 * bit_amplitude(Bit(u)) +
                        g2 * Complex(0, bit_amplitude(Bit(v2)));
      t[u][v2] = -std::norm(y - m) * inv;
    }
  }
  const auto acc = opts.max_log
                       ? +[](double a, double b) { return std::max(a, b); }
                       : +[](double a, double b) { return lse(a, b); };
  MixedLlrs out;
  out.u = acc(t[0][0], t[0][1]) - acc(t[1][0], t[1][1]);
  out.v2 = acc(t[0][0], t[1][0]) - acc(t[0][1], t[1][1]);
  // w = u XOR v2: w=0 on the diagonal.
  out.w = acc(t[0][0], t[1][1]) - acc(t[0][1], t[1][0]);
  return out;
}

double pilot_symbol_llr(Complex y, Complex g1, Complex g2, double noise_var) {
  check_noise(noise_var);
  const Complex pilot = g2 * Complex(0, kInvSqrt2);
  const Complex m0 = g1 * kInvSqrt2 + pilot;
  const Complex m1 = -g1 * kInvSqrt2 + pilot;
  return (std::norm(y - m1) - std::norm(y - m0)) / (2.0 * noise_var);
}

LlrFrame demap(ConstRefSymbols y, ConstRefSymbols g1, ConstRefSymbols g2,
               double noise_var, const DemapOptions& opts) {
  if (y.size() % 2 != 0 || y.size() == 0) {
    throw std::invalid_argument("demap: frame length must be even");
  }
  if (g1.size() != y.size() || g2.size() != y.size()) {
    throw std::invalid_argument("demap: gain length mismatch");
  }
  check_noise(noise_var);
  const Eigen::Index n = y.size() / 2;
  LlrFrame llr(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const MixedLlrs mixed =
        mixed_symbol_llrs(y[n + i], g1[n + i], g2[n + i], noise_var, opts);
    llr[i] = pilot_symbol_llr(y[i], g1[i], g2[i], noise_var) + mixed.u;
    llr[n + i] = mixed.w;
  }
  return llr;
}

LlrFrame demap(ConstRefSymbols y, Complex g1, Complex g2, double noise_var,
               const DemapOptions& opts) {
  return demap(y, SymbolFrame::Constant(y.size(), g1),
               SymbolFrame::Constant(y.size(), g2), noise_var, opts);
}

LlrFrame demap_mrc(ConstRefSymbols s1t, ConstRefSymbols s2t,
                   const Eigen::VectorXd& gain, double noise_var,
                   const DemapOptions& opts) {
  const Eigen::Index n = s1t.size();
  if (s2t.size() != n || gain.size() != n || n == 0) {
    throw std::invalid_argument("demap_mrc: length mismatch");
  }
  check_noise(noise_var);
  const auto acc = opts.max_log
                       ? +[](double a, double b) { return std::max(a, b); }
                       : +[](double a, double b) { return lse(a, b); };
  LlrFrame llr(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    // A vanishing effective gain carries no information; the floor only
    // guards the division.
    const double g = std::max(gain[k], 1e-12);
    const double inv = 1.0 / (2.0 * g * noise_var);
    double t[2][2];
    for (int u = 0; u < 2; ++u) {
      for (int v2 = 0; v2 < 2; ++v2) {
        const double d1 = std::norm(s1t[k] - g * Complex(bit_amplitude(Bit(u)), 0));
        const double d2 = std::norm(s2t[k] - g * Complex(0, bit_amplitude(Bit(v2))));
        t[u][v2] = -(d1 + d2) * inv;
      }
    }
    llr[k] = acc(t[0][0], t[0][1]) - acc(t[1][0], t[1][1]);
    llr[n + k] = acc(t[0][0], t[1][1]) - acc(t[0][1], t[1][0]);
  }
  return llr;
}

void write_symbols_csv(std::ostream& out, ConstRefSymbols frame) {
  char line[80];
  for (Eigen::Index i = 0; i < frame.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", frame[i].real(),
                  frame[i].imag());
    out << line;
  }
}

}  // namespace modem
}  // namespace luep
