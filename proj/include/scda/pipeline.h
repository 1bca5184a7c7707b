#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scda/assets.h"
#include "scda/corpus.h"
#include "scda/embedding.h"
#include "scda/similarity.h"
#include "scda/structural.h"
#include "scda/summarizer.h"
#include "scda/types.h"

namespace scda {

struct PipelineConfig {
  std::vector<GeneratorId> generators{kAllGenerators.begin(),
                                      kAllGenerators.end()};
  std::size_t top_k = kDefaultTopK;
  SeedConfig seed;
  std::string embedder = "builtin";     // "builtin" or an http:// URL
  std::string summarizer = "fallback";  // "fallback" or an http:// URL
  AssetPaths assets;
  double hmeg_threshold = kDefaultHmegThreshold;
  std::size_t jobs = 1;

  // Throws Error(kConfig) on an empty generator set, k == 0, a threshold
  // outside [0, 1], jobs == 0 or a missing asset file.
  void validate() const;

  // Everything that influences output bytes, in a canonical form.
  Json to_json() const;
  std::string hash() const;

  bool enabled(GeneratorId id) const;
};

// Parses "speg,hmeg,..." (case-insensitive). Error(kConfig) on unknown names.
std::vector<GeneratorId> parse_generator_list(std::string_view list);

std::unique_ptr<EmbeddingProvider> make_embedder(const std::string& spec);
// Null for "fallback".
std::unique_ptr<SummarizerClient> make_summarizer(const std::string& spec);

struct SkipRecord {
  std::string source_id;
  GeneratorId generator = GeneratorId::kSpeg;
  SkipReason reason = SkipReason::kNoCollocations;
};

Json to_json(const SkipRecord& skip);
SkipRecord skip_from_json(const Json& record);

struct SampleResult {
  std::vector<AugmentedSample> augmented;
  std::vector<SkipRecord> skips;
  std::size_t provider_errors = 0;
  std::size_t warnings = 0;
  std::size_t summarizer_fallbacks = 0;
};

// Runs the enabled generators on one sample. Thread-safe; output is a pure
// function of (config, assets, providers, sample).
class Augmenter {
 public:
  Augmenter(const PipelineConfig& config, const AssetBundle& assets,
            const EmbeddingProvider& embedder,
            const SummarizerClient* summarizer);

  SampleResult process(const TextSample& sample) const;

 private:
  const PipelineConfig& config_;
  const AssetBundle& assets_;
  const EmbeddingProvider& embedder_;
  const SummarizerClient* summarizer_;
  LexiconSegmenter segmenter_;
  HeuristicDependencyParser parser_;
  std::optional<EmojiIndex> emoji_index_;  // built only when EEEG is enabled
  FallbackSummarizer fallback_;
};

struct GeneratorCounts {
  std::size_t augmented = 0;
  std::size_t skipped = 0;
};

struct RunManifest {
  std::string config_hash;
  std::map<std::string, std::string> asset_digests;
  std::size_t samples = 0;
  std::map<GeneratorId, GeneratorCounts> counts;
  std::size_t provider_errors = 0;
  std::size_t warnings = 0;
  std::size_t summarizer_fallbacks = 0;
  double wall_seconds = 0.0;

  Json to_json() const;
};

// Pulls samples until it returns nullopt.
using SampleSource = std::function<std::optional<TextSample>()>;

// Processes samples on `config.jobs` workers in bounded batches and writes
// records in input order. For every sample and enabled generator exactly one
// augmented record or skip record is written.
RunManifest run_augment(const PipelineConfig& config, const AssetBundle& assets,
                        const EmbeddingProvider& embedder,
                        const SummarizerClient* summarizer,
                        const SampleSource& source, std::ostream& augmented_out,
                        std::ostream& skips_out);

RunManifest run_augment(const PipelineConfig& config, const AssetBundle& assets,
                        const EmbeddingProvider& embedder,
                        const SummarizerClient* summarizer,
                        const std::vector<TextSample>& corpus,
                        std::ostream& augmented_out, std::ostream& skips_out);

// Sibling output files: foo.jsonl -> foo.skips.jsonl / foo.manifest.json.
std::filesystem::path skips_path_for(const std::filesystem::path& output);
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

struct StatsResult {
  std::vector<SimilarityRow> rows;
  Json json;
  std::string table;
};

// similarity_report plus its JSON and aligned-text renderings.
StatsResult run_stats(const std::vector<TextSample>& originals,
                      const std::vector<AugmentedSample>& augmented,
                      const EmbeddingProvider& embedder);

struct VerifyFailure {
  std::string source_id;
  std::string reason;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unverifiable = 0;
  std::size_t ignored = 0;  // non-IREG records
  std::vector<VerifyFailure> failures;

  Json to_json() const;
};

// For each IREG record: the mapping must be an involution, applying it to
// the bases must yield T', and applying it again must restore the bases
// (and, when originals are supplied, the original text).
VerifyReport run_verify(const std::vector<AugmentedSample>& augmented,
                        const std::vector<TextSample>* originals = nullptr);

// JSONL {"theme": str, "content": str}.
std::vector<ThemeContentPair> load_raw_pairs(const std::filesystem::path& path);

struct PrepResult {
  std::vector<ThemeContentPair> pairs;
  std::string stream;
  CleaningReport report;
};

// clean_corpus then format_training. An empty cleaned set yields an empty
// stream.
PrepResult run_prep(const std::vector<ThemeContentPair>& raw,
                    const StreamMarkers& markers = {},
                    const CleaningOptions& options = {});

}  // namespace scda
