#pragma once

#include <cstdint>
#include <random>

namespace hermite {

// splitmix64 finalizer; used to turn (base_seed, replication index) into a
// well-separated stream seed so replication r is independent of scheduling.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t rep) {
  return mix_seed(base_seed ^ (0xd1b54a32d192ed03ULL * (rep + 1)));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace hermite
