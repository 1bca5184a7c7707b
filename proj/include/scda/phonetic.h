#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scda/collocation.h"
#include "scda/types.h"

namespace scda {

// Character -> tone-stripped pinyin syllable.
class PinyinTable {
 public:
  // UTF-8 TSV: char<TAB>pinyin.
  static PinyinTable load(const std::filesystem::path& path);

  // Syllables must be non-empty lowercase ASCII.
  void add(char32_t c, std::string syllable);
  const std::string* find(char32_t c) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<char32_t, std::string> table_;
};

struct PinyinTranscription {
  std::string pinyin;                  // concatenation of `syllables`
  std::vector<std::string> syllables;  // one per character
};

// Throws Error(kData) naming the first character missing from the table.
PinyinTranscription to_pinyin(std::string_view text, const PinyinTable& table);

// Levenshtein distance over bytes with unit costs.
std::size_t edit_distance(std::string_view a, std::string_view b);

// 1 - edit_distance / max(len). Two empty strings are fully similar.
double pinyin_similarity(std::string_view a, std::string_view b);

// Contiguous spans of 2 then 3 characters, each group left to right.
std::vector<CharSpan> enumerate_spans(std::size_t char_count);

// Phonetic symbol -> pinyin fragment. Stress marks map to "".
class SymbolMap {
 public:
  // UTF-8 TSV: symbol<TAB>fragment (the fragment may be empty).
  static SymbolMap load(const std::filesystem::path& path);

  void add(std::string_view symbol, std::string fragment);
  // Greedy longest-symbol transcription. Throws Error(kData) on a symbol
  // outside the map.
  std::string transcribe(std::string_view phonetic) const;
  bool covers(std::string_view phonetic) const;
  std::size_t size() const { return fragments_.size(); }

 private:
  std::unordered_map<std::u32string, std::string> fragments_;
  std::size_t max_symbol_length_ = 0;
};

struct PronunciationEntry {
  std::string word;           // 3-7 ASCII letters
  std::string phonetic;       // IPA as published
  std::string pinyin_approx;  // manual pinyin rendering
  int syllables = 0;          // 2-3
};

class PronunciationDictionary {
 public:
  // UTF-8 TSV: word<TAB>phonetic_symbols<TAB>pinyin_approx<TAB>syllables.
  // When `symbols` is given every phonetic string must be transcribable.
  static PronunciationDictionary load(const std::filesystem::path& path,
                                      const SymbolMap* symbols = nullptr);

  // Throws Error(kData) when the entry violates the length/syllable bounds.
  void add(PronunciationEntry entry);
  const std::vector<PronunciationEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<PronunciationEntry> entries_;
};

inline constexpr double kDefaultHmegThreshold = 0.5;

struct HomophoneMatch {
  CharSpan span;  // character offsets within the collocation
  std::string span_pinyin;
  std::string word;
  double similarity = 0.0;
};

// Total order over candidate matches: higher similarity, then longer span,
// then lexicographically smaller word, then earlier span.
bool better_match(const HomophoneMatch& a, const HomophoneMatch& b);

// Best (span, word) pair over all 2-3 character spans of a transcribed
// collocation, regardless of threshold. Empty when the collocation has fewer
// than two characters. Throws Error(kInvalidArgument) on an empty dictionary.
std::optional<HomophoneMatch> find_best_homophone(
    std::span<const std::string> syllables,
    const PronunciationDictionary& dict);

// find_best_homophone on to_pinyin(wc), filtered by `threshold`.
std::optional<HomophoneMatch> best_homophone(
    std::string_view wc, const PinyinTable& table,
    const PronunciationDictionary& dict,
    double threshold = kDefaultHmegThreshold);

// Replaces the single best-sounding span across all collocations with its
// English homophone. Collocations with untranscribable characters are
// ignored.
Outcome hmeg_augment(const TextSample& sample, const CollocationSet& colls,
                     const PinyinTable& table,
                     const PronunciationDictionary& dict,
                     double threshold = kDefaultHmegThreshold);

}  // namespace scda
