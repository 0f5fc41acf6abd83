#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "luep/alist.hpp"
#include "luep/bp.hpp"
#include "luep/gf2.hpp"
#include "luep/golden.hpp"
#include "luep/linear_code.hpp"
#include "luep/modem.hpp"
#include "luep/rng.hpp"
#include "luep/tanner.hpp"

using namespace luep;
using namespace luep::decoder;
using codes::PlotkinCode;

namespace {

PlotkinCode toy_code() {
  return codes::plotkin_combine(codes::spc_code(8), codes::repetition_code(8));
}

PlotkinCode main_code() {
  auto h = codes::read_alist_file(std::string(LUEP_CODES_DIR) + "/" +
                                  codes::kGolden2076File);
  return codes::plotkin_combine(codes::spc_code(20),
                                codes::code_from_parity(h, 6));
}

LlrFrame strong_llrs(ConstRefBits codeword, double mag = 20.0) {
  LlrFrame llr(codeword.size());
  for (Eigen::Index i = 0; i < codeword.size(); ++i) {
    llr[i] = codeword[i] ? -mag : mag;
  }
  return llr;
}

bool zero_syndrome(ConstRefMat h, ConstRefBits cw) {
  return gf2_is_zero(ConstRefMat(gf2_mul_row(cw, h.transpose())));
}

}  // namespace

TEST_CASE("tanner graph mirrors the parity-check support") {
  BinaryMatrix h(2, 4);
  h << 1, 1, 0, 1, 0, 1, 1, 0;
  TannerGraph g = build_tanner(h);
  CHECK(g.check_count == 2);
  CHECK(g.variable_count == 4);
  CHECK(g.edge_count == 5);
  REQUIRE(g.check_vars.size() == 2);
  CHECK(g.check_vars[0] == std::vector<int>{0, 1, 3});
  CHECK(g.check_vars[1] == std::vector<int>{1, 2});
  CHECK(g.var_checks[0] == std::vector<int>{0});
  CHECK(g.var_checks[1] == std::vector<int>{0, 1});
  CHECK(g.var_checks[2] == std::vector<int>{1});
  CHECK(g.var_checks[3] == std::vector<int>{0});
  // Edge ids are check-major and consistent between the two views.
  CHECK(g.check_edges[0] == std::vector<int>{0, 1, 2});
  CHECK(g.check_edges[1] == std::vector<int>{3, 4});
  CHECK(g.var_edges[1] == std::vector<int>{1, 3});
}

TEST_CASE("tanner graph of the composite codes") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  CHECK(g.check_count == 8);
  CHECK(g.variable_count == 16);
  std::size_t ones = 0;
  for (Eigen::Index i = 0; i < toy.inner.H.rows(); ++i)
    for (Eigen::Index j = 0; j < toy.inner.H.cols(); ++j)
      if (toy.inner.H(i, j)) ++ones;
  CHECK(g.edge_count == ones);
  for (Eigen::Index j = 0; j < 16; ++j) {
    for (int c : g.var_checks[static_cast<std::size_t>(j)]) {
      CHECK(toy.inner.H(c, j) == 1);
    }
    CHECK(int(g.var_checks[static_cast<std::size_t>(j)].size()) ==
          toy.inner.H.col(j).cast<int>().sum());
  }

  PlotkinCode big = main_code();
  TannerGraph gb = build_tanner(big.inner.H);
  CHECK(gb.check_count == 14);
  CHECK(gb.variable_count == 40);

  CHECK_THROWS_AS(build_tanner(BinaryMatrix()), std::invalid_argument);
}

TEST_CASE("dot rendering") {
  BinaryMatrix h(1, 3);
  h << 1, 1, 1;
  TannerGraph g = build_tanner(h);
  std::stringstream ss;
  write_dot(ss, g);
  const std::string dot = ss.str();
  CHECK(dot.find("graph tanner") != std::string::npos);
  CHECK(dot.find("c0 -- v0") != std::string::npos);
  CHECK(dot.find("c0 -- v2") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("shape=square") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos;
       pos = dot.find("--", pos + 2)) {
    ++edges;
  }
  CHECK(edges == g.edge_count);
}

TEST_CASE("bp accepts a clean word before iterating") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  auto eng = make_engine({21});
  BitVector m2 = BitVector::NullaryExpr(1, [&]() { return Bit(eng() & 1); });
  BitVector m1 = BitVector::NullaryExpr(7, [&]() { return Bit(eng() & 1); });
  codes::Encoding enc = codes::encode(toy, m2, m1);
  BpResult res = bp_decode(g, strong_llrs(enc.codeword));
  CHECK(res.converged);
  CHECK(res.iterations == 0);
  CHECK(res.codeword == enc.codeword);
}

TEST_CASE("all-zero llrs resolve to the all-zero codeword") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  BpResult res = bp_decode(g, LlrFrame::Zero(16));
  CHECK(res.converged);
  CHECK(res.iterations == 0);
  CHECK(res.codeword == BitVector::Zero(16));
}

TEST_CASE("bp corrects a weakly wrong position in the toy code") {
  // Position 7 is excluded: vars 7 and 15 sit together in all seven
  // repetition checks, and a weak flip at 7 bounces between the two hubs
  // instead of settling. The next case pins that behaviour down.
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  auto eng = make_engine({22});
  for (int trial = 0; trial < 20; ++trial) {
    BitVector m2 = BitVector::NullaryExpr(1, [&]() { return Bit(eng() & 1); });
    BitVector m1 = BitVector::NullaryExpr(7, [&]() { return Bit(eng() & 1); });
    codes::Encoding enc = codes::encode(toy, m2, m1);
    for (Eigen::Index flip = 0; flip < 16; ++flip) {
      if (flip == 7) continue;
      CAPTURE(trial);
      CAPTURE(flip);
      LlrFrame llr = strong_llrs(enc.codeword, 8.0);
      llr[flip] = enc.codeword[flip] ? 2.0 : -2.0;  // wrong side, low weight
      BpResult res = bp_decode(g, llr);
      CHECK(res.converged);
      CHECK(res.codeword == enc.codeword);
      CHECK(res.iterations >= 1);
      CHECK(res.iterations <= 2);
    }
  }
}

TEST_CASE("weak flip at the hub variable oscillates and never converges") {
  // Iteration 1 moves the lone error from var 7 to var 15, iteration 2
  // moves it back: all seven shared checks relay the wrong opinion at
  // once, overwhelming the channel evidence. Stable period-2 cycle.
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  auto eng = make_engine({29});
  for (int trial = 0; trial < 5; ++trial) {
    BitVector m2 = BitVector::NullaryExpr(1, [&]() { return Bit(eng() & 1); });
    BitVector m1 = BitVector::NullaryExpr(7, [&]() { return Bit(eng() & 1); });
    codes::Encoding enc = codes::encode(toy, m2, m1);
    LlrFrame llr = strong_llrs(enc.codeword, 8.0);
    llr[7] = enc.codeword[7] ? 2.0 : -2.0;
    BpOptions opts;
    BpResult res = bp_decode(g, llr, opts);
    CHECK(!res.converged);
    CHECK(res.iterations == opts.max_iter);
    int wrong = 0;
    for (Eigen::Index i = 0; i < 16; ++i) wrong += res.codeword[i] != enc.codeword[i];
    CHECK(wrong == 1);  // the error never spreads, it only shuttles
  }
}

TEST_CASE("converged results always satisfy the parity checks") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  auto eng = make_engine({23});
  std::normal_distribution<double> gauss(1.5, 1.2);  // noisy, biased to 0
  int converged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LlrFrame llr =
        LlrFrame::NullaryExpr(16, [&]() { return gauss(eng); });
    BpResult res = bp_decode(g, llr);
    CHECK(res.iterations <= 50);
    REQUIRE(res.codeword.size() == 16);
    if (res.converged) {
      ++converged;
      CHECK(zero_syndrome(toy.inner.H, res.codeword));
    }
  }
  CHECK(converged > 0);  // the regime is noisy but not hopeless
}

TEST_CASE("bp is deterministic") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  auto eng = make_engine({24});
  std::normal_distribution<double> gauss(0.0, 2.0);
  LlrFrame llr = LlrFrame::NullaryExpr(16, [&]() { return gauss(eng); });
  BpResult a = bp_decode(g, llr);
  BpResult b = bp_decode(g, llr);
  CHECK(a.codeword == b.codeword);
  CHECK(a.converged == b.converged);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("bp option validation") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  BpOptions bad;
  bad.max_iter = 0;
  CHECK_THROWS_AS(bp_decode(g, LlrFrame::Zero(16), bad), std::invalid_argument);
  CHECK_THROWS_AS(bp_decode(g, LlrFrame::Zero(15)), std::invalid_argument);
}

TEST_CASE("decode_frame recovers messages through the clean demap chain") {
  PlotkinCode toy = toy_code();
  TannerGraph g = build_tanner(toy.inner.H);
  for (std::uint64_t msg = 0; msg < 256; ++msg) {
    BitVector m1 = gf2_unpack(msg & 0x7f, 7);
    BitVector m2 = gf2_unpack(msg >> 7, 1);
    codes::Encoding enc = codes::encode(toy, m2, m1);
    auto [f1, f2] = modem::map_sources(enc.v1, enc.v2);
    SymbolFrame y = modem::superpose(f1, f2, Complex(1, 0), Complex(1, 0));
    LlrFrame llr = modem::demap(y, Complex(1, 0), Complex(1, 0), 1e-2);
    DecodeResult res = decode_frame(toy, g, llr);
    CHECK(res.converged);
    CHECK(res.msg1 == m1);
    CHECK(res.msg2 == m2);
  }
}

TEST_CASE("decode_frame on the main composite, clean chain") {
  PlotkinCode big = main_code();
  TannerGraph g = build_tanner(big.inner.H);
  auto eng = make_engine({26});
  for (int trial = 0; trial < 1000; ++trial) {
    BitVector m2 = BitVector::NullaryExpr(7, [&]() { return Bit(eng() & 1); });
    BitVector m1 = BitVector::NullaryExpr(19, [&]() { return Bit(eng() & 1); });
    codes::Encoding enc = codes::encode(big, m2, m1);
    auto [f1, f2] = modem::map_sources(enc.v1, enc.v2);
    SymbolFrame y = modem::superpose(f1, f2, Complex(1, 0), Complex(1, 0));
    LlrFrame llr = modem::demap(y, Complex(1, 0), Complex(1, 0), 1e-2);
    DecodeResult res = decode_frame(big, g, llr);
    CHECK(res.converged);
    CHECK(res.iterations == 0);
    CHECK(res.msg1 == m1);
    CHECK(res.msg2 == m2);
  }
}
