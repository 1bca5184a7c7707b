#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scda/types.h"

namespace scda {

// Position permutation relating a segment sequence T (the bases) to its
// rearrangement T': T'[i] = bases[mapping[i]]. `mapping` is 0-based in
// memory and 1-based when serialized.
struct PermutationRecord {
  std::vector<std::string> bases;
  std::vector<std::size_t> mapping;
  std::string source_id;
};

bool is_bijection(std::span<const std::size_t> mapping);

// Finds the mapping with t_prime[i] = t[mapping[i]]; repeated elements are
// matched leftmost-first. Throws Error(kInvalidArgument) when t_prime is not
// a rearrangement of t.
PermutationRecord build_permutation(std::span<const std::string> t,
                                    std::span<const std::string> t_prime);

// out[i] = sequence[mapping[i]].
std::vector<std::string> apply_permutation(
    std::span<const std::size_t> mapping, std::span<const std::string> sequence);

// mapping o mapping == identity. False for non-bijections.
bool is_involution(const PermutationRecord& record);
bool is_involution(std::span<const std::size_t> mapping);

// {"bases": [...], "mapping": [1-based ...]}
Json to_json(const PermutationRecord& record);
// Throws Error(kData) on missing or ill-typed fields, or a mapping that is
// not a bijection of the right size.
PermutationRecord permutation_from_json(const Json& json);

}  // namespace scda
