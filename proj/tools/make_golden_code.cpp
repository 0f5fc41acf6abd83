#include <cstdio>
#include <exception>
#include <string>

#include "luep/alist.hpp"
#include "luep/golden.hpp"
#include "luep/linear_code.hpp"

// Regenerates the pinned (20,7,6) parity-check matrix and writes it in alist
// form. The output is deterministic; a test asserts it matches the committed
// file.
int main(int argc, char** argv) {
  const std::string out =
      argc > 1 ? argv[1] : std::string("codes/") + luep::codes::kGolden2076File;
  try {
    const luep::codes::LinearCode code =
        luep::codes::gallager_ldpc(20, 7, 6, luep::codes::kGolden2076Seed);
    luep::codes::write_alist_file(out, code.H);
    std::printf("wrote (%ld,%ld) d=%d parity-check matrix to %s\n",
                long(code.n), long(code.k), code.d, out.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "make_golden_code: %s\n", e.what());
    return 1;
  }
  return 0;
}
