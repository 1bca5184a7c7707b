#include "scda/random.h"

#include <limits>

#include "scda/error.h"

namespace scda {

std::size_t RandomStream::uniform_index(std::size_t n) {
  if (n == 0) throw invalid_argument("uniform_index: n must be positive");
  const std::uint64_t bound = n;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::size_t RandomStream::uniform_between(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw invalid_argument("uniform_between: empty range");
  return lo + uniform_index(hi - lo + 1);
}

double RandomStream::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream derive_rng(const SeedConfig& seed, std::string_view sample_id,
                        GeneratorId generator) {
  std::string key;
  for (int shift = 0; shift < 64; shift += 8) {
    key.push_back(static_cast<char>((seed.master_seed >> shift) & 0xFF));
  }
  key += to_string(generator);
  key.push_back('\0');
  key += sample_id;
  return RandomStream(splitmix64(fnv1a64(key)));
}

}  // namespace scda
