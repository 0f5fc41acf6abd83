#ifndef LUEP_GOLDEN_HPP
#define LUEP_GOLDEN_HPP

#include <cstdint>

namespace luep {
namespace codes {

// The (20,7,6) sparse code is rejection-sampled; this seed pins the search so
// the alist committed under codes/ is reproducible bit for bit. Regenerate
// with the make_golden_code tool; a test compares the output to the file.
inline constexpr std::uint64_t kGolden2076Seed = 0xc0de2076ull;
inline constexpr const char* kGolden2076File = "gallager_20_7_6.alist";

}  // namespace codes
}  // namespace luep

#endif  // LUEP_GOLDEN_HPP
