#ifndef LUEP_RNG_HPP
#define LUEP_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace luep {

// splitmix64 step (Vigna). Used only for seed derivation, never as the
// simulation RNG itself.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seed-splitting rule: fold every word of the path through splitmix64.
// Concurrent trials derive their streams as
//   mix_seed({master, stream_tag, point_index, frame_index})
// so the draw sequence of a trial depends only on its indices, never on
// scheduling or worker count.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = 0x243f6a8885a308d3ull;  // arbitrary nonzero start
  for (std::uint64_t word : path) {
    state ^= word;
    // Fold the full avalanche back into the running state. XOR alone would
    // let low-bit differences in one word cancel against the next.
    state = splitmix64(state);
  }
  return state;
}

inline std::mt19937_64 make_engine(std::initializer_list<std::uint64_t> path) {
  return std::mt19937_64(mix_seed(path));
}

}  // namespace luep

#endif  // LUEP_RNG_HPP
