#ifndef LUEP_ALIST_HPP
#define LUEP_ALIST_HPP

#include <iosfwd>
#include <string>

#include "luep/types.hpp"

namespace luep {
namespace codes {

// Parity-check matrices travel in the standard alist text format:
//   line 1: n m            (columns = code bits, rows = checks)
//   line 2: max column weight, max row weight
//   line 3: the n column weights
//   line 4: the m row weights
//   next n lines: 1-based row indices per column
//   next m lines: 1-based column indices per row
// Zero entries used as padding by some writers are accepted and ignored.

BinaryMatrix read_alist(std::istream& in);
BinaryMatrix read_alist_file(const std::string& path);

void write_alist(std::ostream& out, ConstRefMat h);
void write_alist_file(const std::string& path, ConstRefMat h);

}  // namespace codes
}  // namespace luep

#endif  // LUEP_ALIST_HPP
