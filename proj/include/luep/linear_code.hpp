#ifndef LUEP_LINEAR_CODE_HPP
#define LUEP_LINEAR_CODE_HPP

#include <cstdint>
#include <utility>

#include "luep/types.hpp"

namespace luep {
namespace codes {

// An (n, k, d) binary linear code with G * H^T = 0 over GF(2). d < 0 means
// the minimum distance has not been established. Constituent constructors
// (spc_code, repetition_code, gallager_ldpc) produce systematic G so message
// bits can be read off the first k codeword positions.
struct LinearCode {
  Eigen::Index n = 0;
  Eigen::Index k = 0;
  BinaryMatrix G;  // k x n
  BinaryMatrix H;  // (n-k) x n
  int d = -1;

  bool distance_known() const { return d >= 0; }
};

// Checks shapes, 0/1 entries, G * H^T = 0, rank(G) = k, rank(H) = n - k.
// Throws std::invalid_argument describing the first violation.
void validate(const LinearCode& code);

// Single parity check (n, n-1, 2): H is the all-ones row, G = [I | 1].
LinearCode spc_code(Eigen::Index n);

// Repetition code (n, 1, n): G is the all-ones row, H = [I_{n-1} | 1].
LinearCode repetition_code(Eigen::Index n);

struct GallagerOptions {
  int column_weight = 3;
  long max_attempts = 1'000'000;
};

// Draws sparse parity-check matrices at random until one has n-k independent
// rows and exhaustively verified minimum distance target_d, then returns the
// code in systematic form (columns permuted so the trailing square block of H
// is invertible). Columns have weight column_weight; when n-k <= column_weight
// a fixed weight cannot reach full rank, so columns are drawn uniformly from
// the nonzero patterns instead. Deterministic for a given seed, independent of
// the standard library (raw engine words, no distribution objects).
//
// Throws std::runtime_error naming the attempt count when the budget runs out.
LinearCode gallager_ldpc(Eigen::Index n, Eigen::Index k, int target_d,
                         std::uint64_t seed, const GallagerOptions& opts = {});

// Rebuilds the systematic generator from a full-rank H whose trailing
// (n-k) x (n-k) block is invertible (the form gallager_ldpc produces and the
// alist files store).
LinearCode code_from_parity(ConstRefMat h, int known_d = -1);

// The |u|u+v| composition of two equal-length codes.
//
//   G = [ G1 G1 ]      H = [ H1  0  ]
//       [ 0  G2 ]          [ H2  H2 ]
//
// The H block layout is the one that annihilates G: the first half is in C1,
// and the XOR of the two halves is in C2. (The variant pairing [H1 H1] with
// [0 H2] fails G * H^T = 0 whenever C1 is not contained in C2: it demands
// H2 * v1 = 0 for v1 in C1.)
struct PlotkinCode {
  LinearCode inner;  // (2n, k1+k2), d = min(2*d1, d2) when constituents known
  LinearCode c1;
  LinearCode c2;
  // Design separations per message class from the constituent distances,
  // (s_high, s_low) = (d2, 2*d1). These equal the true per-class minimum
  // weights whenever 2*d1 <= d2 (the regime this construction targets);
  // outside it the low class can fall below 2*d1 and only the exhaustive
  // oracle gives the real values.
  std::pair<int, int> separation{-1, -1};
  bool luep_condition = false;  // 2*d1 < d2

  Eigen::Index n() const { return c1.n; }  // constituent length
  Eigen::Index k1() const { return c1.k; }
  Eigen::Index k2() const { return c2.k; }
};

PlotkinCode plotkin_combine(const LinearCode& c1, const LinearCode& c2);

// One encoded frame. The composite codeword is |v1 | v1 + v2|; the halves and
// the constituent codewords are exposed separately because the two source
// nodes transmit them separately.
struct Encoding {
  BitVector codeword;  // length 2n
  BitVector v1;        // in C1
  BitVector v2;        // in C2
  BitVector first_half() const { return codeword.head(codeword.size() / 2); }
  BitVector second_half() const { return codeword.tail(codeword.size() / 2); }
};

// Message space is {0,1}^k2 x {0,1}^k1: msg2 selects the strongly protected
// class, msg1 the weakly protected one.
Encoding encode(const PlotkinCode& code, ConstRefBits msg2, ConstRefBits msg1);

// Positional message extraction from a composite codeword: v1 is the first
// half, v2 = first half XOR second half, and both constituents are systematic.
// Returns (msg2, msg1).
std::pair<BitVector, BitVector> extract_messages(const PlotkinCode& code,
                                                 ConstRefBits codeword);

}  // namespace codes
}  // namespace luep

#endif  // LUEP_LINEAR_CODE_HPP
