#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "luep/channel.hpp"
#include "luep/rng.hpp"
#include "luep/stbc.hpp"

using namespace luep;
using namespace luep::stbc;
using channel::ChannelRealization;
using channel::CsiEstimate;

namespace {

SymbolFrame random_symbols(std::mt19937_64& eng, Eigen::Index n) {
  std::normal_distribution<double> gauss;
  SymbolFrame f(n);
  for (Eigen::Index i = 0; i < n; ++i) f[i] = Complex(gauss(eng), gauss(eng));
  return f;
}

ChannelRealization fixed_channel(Eigen::Index blocks, Eigen::Index block_len,
                                 std::uint64_t seed) {
  auto eng = make_engine({seed});
  return channel::rayleigh_draw(blocks, block_len, eng);
}

}  // namespace

TEST_CASE("schedule geometry for one pair") {
  SymbolFrame f1(1), f2(1);
  f1[0] = Complex(1, 2);
  f2[0] = Complex(-3, 0.5);
  for (Pairing p : {Pairing::adjacent, Pairing::offset_n}) {
    AlamoutiFrame frame = alamouti_schedule(f1, f2, p);
    REQUIRE(frame.pairs() == 1);
    CHECK(frame.node1_tx[frame.slot_a(0)] == f1[0]);
    CHECK(frame.node2_tx[frame.slot_a(0)] == f2[0]);
    CHECK(frame.node1_tx[frame.slot_b(0)] == -std::conj(f2[0]));
    CHECK(frame.node2_tx[frame.slot_b(0)] == std::conj(f1[0]));
  }
}

TEST_CASE("pairings place the conjugate phase differently") {
  auto eng = make_engine({2});
  SymbolFrame f1 = random_symbols(eng, 4), f2 = random_symbols(eng, 4);

  AlamoutiFrame adj = alamouti_schedule(f1, f2, Pairing::adjacent);
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(adj.slot_a(k) == 2 * k);
    CHECK(adj.slot_b(k) == 2 * k + 1);
    CHECK(adj.node1_tx[2 * k] == f1[k]);
    CHECK(adj.node1_tx[2 * k + 1] == -std::conj(f2[k]));
  }

  AlamoutiFrame off = alamouti_schedule(f1, f2, Pairing::offset_n);
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(off.slot_a(k) == k);
    CHECK(off.slot_b(k) == k + 4);
    // First half is each node's own stream, second half the partner's
    // conjugate.
    CHECK(off.node1_tx[k] == f1[k]);
    CHECK(off.node2_tx[k] == f2[k]);
    CHECK(off.node1_tx[k + 4] == -std::conj(f2[k]));
    CHECK(off.node2_tx[k + 4] == std::conj(f1[k]));
  }
}

TEST_CASE("deschedule inverts schedule") {
  auto eng = make_engine({3});
  for (Pairing p : {Pairing::adjacent, Pairing::offset_n}) {
    SymbolFrame f1 = random_symbols(eng, 7), f2 = random_symbols(eng, 7);
    auto [g1, g2] = alamouti_deschedule(alamouti_schedule(f1, f2, p));
    CHECK((g1 - f1).norm() == doctest::Approx(0.0));
    CHECK((g2 - f2).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("mrc recovers scaled streams noiselessly") {
  auto eng = make_engine({4});
  for (Pairing p : {Pairing::adjacent, Pairing::offset_n}) {
    for (int trial = 0; trial < 250; ++trial) {
      const Eigen::Index m = 5;
      SymbolFrame f1 = random_symbols(eng, m), f2 = random_symbols(eng, m);
      AlamoutiFrame frame = alamouti_schedule(f1, f2, p);
      ChannelRealization ch = channel::rayleigh_draw(1, 2 * m, eng);
      SymbolFrame y = channel::apply_gains(ch, frame.node1_tx, frame.node2_tx);
      CombinedFrame out = mrc_combine(y, channel::perfect_csi(ch), p);
      const double g = std::norm(ch.h1[0]) + std::norm(ch.h2[0]);
      for (Eigen::Index k = 0; k < m; ++k) {
        CHECK(out.effective_gain[k] == doctest::Approx(g).epsilon(1e-12));
        CHECK(std::abs(out.s1_tilde[k] - g * f1[k]) < 1e-10);
        CHECK(std::abs(out.s2_tilde[k] - g * f2[k]) < 1e-10);
      }
    }
  }
}

TEST_CASE("mrc degenerates to a single link when one gain vanishes") {
  SymbolFrame f1(2), f2(2);
  f1 << Complex(0.3, -0.1), Complex(1, 1);
  f2 << Complex(-0.5, 0.2), Complex(0, -1);
  AlamoutiFrame frame = alamouti_schedule(f1, f2, Pairing::adjacent);
  ChannelRealization ch;
  ch.block_len = 4;
  ch.h1.resize(1);
  ch.h2.resize(1);
  ch.h1 << Complex(0.8, -0.6);
  ch.h2 << Complex(0, 0);
  SymbolFrame y = channel::apply_gains(ch, frame.node1_tx, frame.node2_tx);
  CombinedFrame out = mrc_combine(y, channel::perfect_csi(ch), Pairing::adjacent);
  for (Eigen::Index k = 0; k < 2; ++k) {
    CHECK(std::abs(out.s1_tilde[k] - f1[k]) < 1e-12);  // |h1|^2 = 1 here
    CHECK(std::abs(out.s2_tilde[k] - f2[k]) < 1e-12);
    CHECK(out.effective_gain[k] == doctest::Approx(1.0));
  }
}

TEST_CASE("mrc is linear in the received frame") {
  auto eng = make_engine({8});
  ChannelRealization ch = channel::rayleigh_draw(1, 6, eng);
  CsiEstimate csi = channel::perfect_csi(ch);
  SymbolFrame y = random_symbols(eng, 6), z = random_symbols(eng, 6);
  CombinedFrame a = mrc_combine(y, csi, Pairing::offset_n);
  CombinedFrame b = mrc_combine(z, csi, Pairing::offset_n);
  CombinedFrame sum = mrc_combine(y + z, csi, Pairing::offset_n);
  for (Eigen::Index k = 0; k < 3; ++k) {
    CHECK(std::abs(sum.s1_tilde[k] - a.s1_tilde[k] - b.s1_tilde[k]) < 1e-12);
    CHECK(std::abs(sum.s2_tilde[k] - a.s2_tilde[k] - b.s2_tilde[k]) < 1e-12);
  }
}

TEST_CASE("post-combining noise variance is the effective gain times sigma2") {
  auto eng = make_engine({9});
  ChannelRealization ch;
  ch.block_len = 2;
  ch.h1.resize(1);
  ch.h2.resize(1);
  ch.h1 << Complex(0.9, 0.3);
  ch.h2 << Complex(-0.4, 0.7);
  CsiEstimate csi = channel::perfect_csi(ch);
  const double g = std::norm(ch.h1[0]) + std::norm(ch.h2[0]);
  const double sigma2 = 0.2;
  std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2));
  const int trials = 200000;
  double p1 = 0, p2 = 0;
  Complex cross(0, 0);
  for (int t = 0; t < trials; ++t) {
    SymbolFrame noise(2);
    noise[0] = Complex(gauss(eng), gauss(eng));
    noise[1] = Complex(gauss(eng), gauss(eng));
    CombinedFrame out = mrc_combine(noise, csi, Pairing::adjacent);
    p1 += std::norm(out.s1_tilde[0]);
    p2 += std::norm(out.s2_tilde[0]);
    cross += out.s1_tilde[0] * std::conj(out.s2_tilde[0]);
  }
  // Per real dimension: g * sigma2.
  CHECK(p1 / trials / 2 == doctest::Approx(g * sigma2).epsilon(0.02));
  CHECK(p2 / trials / 2 == doctest::Approx(g * sigma2).epsilon(0.02));
  CHECK(std::abs(cross) / trials / (2 * g * sigma2) < 0.02);
}

TEST_CASE("mrc validation") {
  ChannelRealization ch = fixed_channel(1, 4, 10);
  CsiEstimate csi = channel::perfect_csi(ch);
  CHECK_THROWS_AS(mrc_combine(SymbolFrame(3), csi, Pairing::adjacent),
                  std::invalid_argument);
  CHECK_THROWS_AS(mrc_combine(SymbolFrame::Zero(6), csi, Pairing::adjacent),
                  std::invalid_argument);  // CSI covers only 4 slots

  // Adjacent pairs fit inside length-2 blocks, offset pairs do not.
  ChannelRealization blocky = fixed_channel(3, 2, 11);
  CsiEstimate bcsi = channel::perfect_csi(blocky);
  SymbolFrame y = SymbolFrame::Zero(6);
  CHECK_NOTHROW(mrc_combine(y, bcsi, Pairing::adjacent));
  CHECK_THROWS_AS(mrc_combine(y, bcsi, Pairing::offset_n),
                  std::invalid_argument);

  CHECK_THROWS_AS(alamouti_schedule(SymbolFrame(2), SymbolFrame(3),
                                    Pairing::adjacent),
                  std::invalid_argument);
}
