#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "scda/types.h"

namespace scda {

// Deterministic stream of random draws. Bounded draws are computed here
// rather than with <random> distributions, whose outputs differ between
// standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). Requires n > 0.
  std::size_t uniform_index(std::size_t n);

  // Uniform integer in [lo, hi].
  std::size_t uniform_between(std::size_t lo, std::size_t hi);

  // Uniform real in [0, 1) with 53 bits of precision.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

// Keyed derivation of the per-(sample, generator) stream. Pure function of
// its arguments.
RandomStream derive_rng(const SeedConfig& seed, std::string_view sample_id,
                        GeneratorId generator);

std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace scda
