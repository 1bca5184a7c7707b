#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scda/embedding.h"
#include "scda/types.h"

namespace scda {

inline constexpr std::size_t kMaxThemeLength = 32;

struct ThemeContentPair {
  std::string theme;
  std::string content;

  bool operator==(const ThemeContentPair&) const = default;
};

// Length thresholds, counted in characters.
struct CleaningOptions {
  std::size_t min_content_length = 100;
  std::size_t min_theme_length = 2;
};

struct CleaningReport {
  std::size_t kept = 0;
  std::size_t duplicates = 0;
  std::size_t short_content = 0;
  std::size_t short_theme = 0;

  // {"kept": n, "dropped": {"dup": n, "short_content": n, "short_theme": n}}
  Json to_json() const;
};

// Removes markup tags and "##" (repeated until neither remains), trims
// whitespace, then drops pairs whose content or theme is too short and
// finally exact duplicates (first occurrence kept). Idempotent.
std::vector<ThemeContentPair> clean_corpus(
    const std::vector<ThemeContentPair>& raw, CleaningReport* report = nullptr,
    const CleaningOptions& options = {});

std::string strip_markup(std::string_view text);

struct StreamMarkers {
  std::string sep = "[SEP]";
  std::string eos = "[EOS]";
};

// content_1 SEP theme_1 EOS content_2 ... content_n SEP theme_n EOS.
// Throws Error(kInvalidArgument) on an empty batch, invalid markers, or a
// theme/content containing a marker (or forming one at a boundary).
std::string format_training(const std::vector<ThemeContentPair>& pairs,
                            const StreamMarkers& markers = {});

// Inverse of format_training. Throws Error(kData) on a malformed stream.
std::vector<ThemeContentPair> parse_training(std::string_view stream,
                                             const StreamMarkers& markers = {});

// Text -> theme capability.
class SummarizerClient {
 public:
  virtual ~SummarizerClient() = default;

  virtual std::string identity() const = 0;
  virtual std::string summarize(std::string_view text,
                                std::size_t max_len) const = 0;
};

// Calls `client`; a theme longer than max_len characters is a ProviderError.
std::string summarize(std::string_view text, const SummarizerClient& client,
                      std::size_t max_len = kMaxThemeLength);

// Extractive stand-in: the comma/period-delimited clause whose embedding is
// closest to the whole text (earliest wins ties), truncated to max_len.
std::string fallback_summarize(std::string_view text,
                               const EmbeddingProvider& embedder,
                               std::size_t max_len = kMaxThemeLength);

class FallbackSummarizer : public SummarizerClient {
 public:
  explicit FallbackSummarizer(const EmbeddingProvider& embedder)
      : embedder_(embedder) {}

  std::string identity() const override { return "fallback"; }
  std::string summarize(std::string_view text,
                        std::size_t max_len) const override {
    return fallback_summarize(text, embedder_, max_len);
  }

 private:
  const EmbeddingProvider& embedder_;
};

// Theme-summary variant. Uses `client` when given and falls back to
// `fallback` when it is null or fails; meta.client names whichever produced
// the theme. Never skips.
AugmentedSample mdeeg_augment(const TextSample& sample,
                              const SummarizerClient* client,
                              const FallbackSummarizer& fallback,
                              std::size_t max_len = kMaxThemeLength);

}  // namespace scda
