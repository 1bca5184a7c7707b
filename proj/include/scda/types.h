#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

namespace scda {

// Insertion-ordered JSON keeps serialized records in a stable field order.
using Json = nlohmann::ordered_json;

enum class GeneratorId { kSpeg, kHmeg, kEeeg, kIreg, kDeg, kMdeeg };

inline constexpr std::array<GeneratorId, 6> kAllGenerators = {
    GeneratorId::kSpeg, GeneratorId::kHmeg, GeneratorId::kEeeg,
    GeneratorId::kIreg, GeneratorId::kDeg,  GeneratorId::kMdeeg};

// "SPEG", "HMEG", ...
std::string_view to_string(GeneratorId id);
// Accepts upper or lower case names.
std::optional<GeneratorId> parse_generator(std::string_view name);

// Why a generator produced no variant for a sample.
enum class SkipReason {
  kNoCollocations,
  kTooShort,
  kBelowThreshold,
  kProviderErrorFallbackUnavailable,
};

std::string_view to_string(SkipReason reason);
std::optional<SkipReason> parse_skip_reason(std::string_view name);

// Half-open range of character (scalar) offsets.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(const CharSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const CharSpan& other) const {
    return begin < other.end && other.begin < end;
  }
  auto operator<=>(const CharSpan&) const = default;
};

Json to_json(const CharSpan& span);

struct TextSample {
  std::string id;
  std::string text;
  std::string label;
};

// Throws Error(kData) when id is empty or text is blank.
void validate(const TextSample& sample);

struct AugmentedSample {
  std::string source_id;
  GeneratorId generator = GeneratorId::kSpeg;
  std::string text;
  std::string label;
  Json meta = Json::object();
};

// Builds a variant of `source` carrying its id and label.
AugmentedSample make_augmented(const TextSample& source, GeneratorId generator,
                               std::string text, Json meta);

// A generator either yields a variant or explains why it did not.
using Outcome = std::variant<AugmentedSample, SkipReason>;

inline bool is_skip(const Outcome& outcome) {
  return std::holds_alternative<SkipReason>(outcome);
}

struct SeedConfig {
  std::uint64_t master_seed = 0;
};

}  // namespace scda
