#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "scda/types.h"

namespace scda {

enum class CorpusFormat { kJsonl, kTsv };

std::optional<CorpusFormat> parse_corpus_format(std::string_view name);
// Picks TSV for *.tsv / *.tab, JSONL otherwise.
CorpusFormat infer_corpus_format(const std::filesystem::path& path);

// Streams samples from a corpus file one record at a time. Blank lines are
// ignored. Malformed records and duplicate ids raise Error(kData) naming the
// 1-based line number.
class CorpusReader {
 public:
  CorpusReader(const std::filesystem::path& path, CorpusFormat format);

  std::optional<TextSample> next();

 private:
  std::ifstream in_;
  CorpusFormat format_;
  std::size_t line_number_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

std::vector<TextSample> load_corpus(const std::filesystem::path& path,
                                    CorpusFormat format);

// Parses one line of input. `line_number` is only used for messages.
TextSample parse_jsonl_sample(std::string_view line, std::size_t line_number);
TextSample parse_tsv_sample(std::string_view line, std::size_t line_number);

Json to_json(const AugmentedSample& sample);
AugmentedSample augmented_from_json(const Json& record);

// One JSON object per line, UTF-8 emitted verbatim.
void write_augmented(std::ostream& out, const AugmentedSample& sample);
std::vector<AugmentedSample> read_augmented(const std::filesystem::path& path);

}  // namespace scda
