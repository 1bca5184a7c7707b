#include "scda/types.h"

#include <algorithm>
#include <cctype>

#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

constexpr std::array<std::string_view, 6> kGeneratorNames = {
    "SPEG", "HMEG", "EEEG", "IREG", "DEG", "MDEEG"};

constexpr std::array<std::string_view, 4> kSkipReasonNames = {
    "no_collocations", "too_short", "below_threshold",
    "provider_error_fallback_unavailable"};

}  // namespace

std::string_view to_string(GeneratorId id) {
  return kGeneratorNames[static_cast<std::size_t>(id)];
}

std::optional<GeneratorId> parse_generator(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (std::size_t i = 0; i < kGeneratorNames.size(); ++i) {
    if (kGeneratorNames[i] == upper) return static_cast<GeneratorId>(i);
  }
  return std::nullopt;
}

std::string_view to_string(SkipReason reason) {
  return kSkipReasonNames[static_cast<std::size_t>(reason)];
}

std::optional<SkipReason> parse_skip_reason(std::string_view name) {
  for (std::size_t i = 0; i < kSkipReasonNames.size(); ++i) {
    if (kSkipReasonNames[i] == name) return static_cast<SkipReason>(i);
  }
  return std::nullopt;
}

Json to_json(const CharSpan& span) { return Json::array({span.begin, span.end}); }

void validate(const TextSample& sample) {
  if (sample.id.empty()) throw data_error("sample id is empty");
  if (utf8::trim(sample.text).empty()) {
    throw data_error("sample '" + sample.id + "' has blank text");
  }
}

AugmentedSample make_augmented(const TextSample& source, GeneratorId generator,
                               std::string text, Json meta) {
  AugmentedSample out;
  out.source_id = source.id;
  out.generator = generator;
  out.text = std::move(text);
  out.label = source.label;
  out.meta = std::move(meta);
  return out;
}

}  // namespace scda
