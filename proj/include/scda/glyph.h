#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scda/collocation.h"
#include "scda/embedding.h"
#include "scda/types.h"

namespace scda {

struct EmojiEntry {
  std::u32string codepoints;
  std::string emoji;    // UTF-8 encoding of `codepoints`
  std::string meaning;
};

class EmojiDictionary {
 public:
  // UTF-8 TSV: space-joined "U+XXXX" codepoints<TAB>meaning.
  static EmojiDictionary load(const std::filesystem::path& path);

  // Throws Error(kData) on invalid codepoints, empty meanings or duplicates.
  void add(std::u32string codepoints, std::string meaning);
  const std::vector<EmojiEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<EmojiEntry> entries_;
};

// Dictionary meanings embedded once with a given provider.
class EmojiIndex {
 public:
  EmojiIndex(const EmojiDictionary& dictionary,
             const EmbeddingProvider& provider);

  struct Match {
    std::size_t entry = 0;
    double similarity = 0.0;
  };

  // Argmax of cosine similarity; ties go to the earlier dictionary entry.
  // Entries whose meaning embedded to a zero vector never match. Empty when
  // `query` is a zero vector.
  std::optional<Match> best(const EmbeddingVector& query) const;

  const EmojiDictionary& dictionary() const { return dictionary_; }

 private:
  const EmojiDictionary& dictionary_;
  std::vector<EmbeddingVector> meanings_;
};

// Replaceable units inside a span of text: each maximal ASCII letter/digit
// run is one unit (a word), every other non-whitespace scalar is one unit.
std::vector<CharSpan> glyph_units(std::u32string_view text, CharSpan within);

// Emoji encryption: every unit of every collocation is replaced by the emoji
// whose meaning embeds closest to the unit itself.
Outcome eeeg_augment(const TextSample& sample, const CollocationSet& colls,
                     const EmojiIndex& index,
                     const EmbeddingProvider& provider);

// Character -> ordered component characters (at least two).
class RadicalTable {
 public:
  // UTF-8 TSV: char<TAB>components.
  static RadicalTable load(const std::filesystem::path& path);

  void add(char32_t c, std::u32string components);
  const std::u32string* find(char32_t c) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<char32_t, std::u32string> table_;
};

// Decomposition: collocation characters found in the table are replaced in
// place by their components; others are kept verbatim.
Outcome deg_augment(const TextSample& sample, const CollocationSet& colls,
                    const RadicalTable& table);

}  // namespace scda
