#ifndef LUEP_GF2_HPP
#define LUEP_GF2_HPP

#include <cstdint>
#include <vector>

#include "luep/types.hpp"

namespace luep {

// Dense GF(2) helpers on top of the Eigen byte types. All entries must be
// 0 or 1; results are reduced mod 2.

BinaryMatrix gf2_mul(ConstRefMat a, ConstRefMat b);
// Row vector times matrix. Separate name: overloading the two on Ref types
// would be ambiguous for expression arguments.
BitVector gf2_mul_row(ConstRefBits v, ConstRefMat m);

inline BitVector gf2_add(ConstRefBits a, ConstRefBits b) {
  return (a + b).unaryExpr([](Bit x) { return Bit(x & 1); });
}

BinaryMatrix gf2_identity(Eigen::Index n);

int gf2_rank(ConstRefMat m);

bool gf2_is_zero(ConstRefMat m);

// Inverse of a square full-rank matrix; throws std::invalid_argument when
// singular.
BinaryMatrix gf2_inverse(ConstRefMat m);

// Left-to-right pivot column scan (Gaussian elimination). Returns the column
// indices of the first maximal independent set; size == rank.
std::vector<Eigen::Index> gf2_pivot_columns(ConstRefMat m);

// Rows packed into 64-bit words, bit j of word = column j. Requires
// cols <= 64; the exhaustive oracles and syndrome checks run on this form.
std::vector<std::uint64_t> gf2_pack_rows(ConstRefMat m);

BitVector gf2_unpack(std::uint64_t word, Eigen::Index n);

}  // namespace luep

#endif  // LUEP_GF2_HPP
