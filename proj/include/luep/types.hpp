#ifndef LUEP_TYPES_HPP
#define LUEP_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace luep {

// GF(2) substrate. Entries are 0/1 bytes; arithmetic lives in gf2.hpp.
using Bit = std::uint8_t;
using BitVector = Eigen::Matrix<Bit, 1, Eigen::Dynamic>;
using BinaryMatrix = Eigen::Matrix<Bit, Eigen::Dynamic, Eigen::Dynamic>;

// Complex baseband signals. One SymbolFrame entry per channel use.
using Complex = std::complex<double>;
using SymbolFrame = Eigen::VectorXcd;
using LlrFrame = Eigen::VectorXd;

using ConstRefBits = Eigen::Ref<const BitVector>;
using ConstRefMat = Eigen::Ref<const BinaryMatrix>;
using ConstRefSymbols = Eigen::Ref<const SymbolFrame>;
using ConstRefLlr = Eigen::Ref<const LlrFrame>;

// Thrown when an exhaustive oracle would exceed its enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace luep

#endif  // LUEP_TYPES_HPP
