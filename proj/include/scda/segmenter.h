#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scda/types.h"

namespace scda {

enum class PosTag { kNoun, kAdjective, kVerb, kIdiom, kOther };

std::string_view to_string(PosTag tag);
// Accepts full names ("noun") and jieba-style tags ("n", "nr", "a", "v",
// "i", "l", "x", ...). Unknown tags map to kOther.
PosTag parse_pos_tag(std::string_view name);

struct PosTaggedToken {
  std::string surface;
  PosTag pos = PosTag::kOther;
  CharSpan span;
};

// Segmentation + POS tagging capability.
class Segmenter {
 public:
  virtual ~Segmenter() = default;

  virtual std::string identity() const = 0;
  virtual std::vector<PosTaggedToken> tag(std::string_view text) const = 0;
};

// surface -> tag dictionary used by the longest-match segmenter.
class Lexicon {
 public:
  // UTF-8 TSV: surface<TAB>pos. '#' starts a comment line. Later entries
  // override earlier ones.
  static Lexicon load(const std::filesystem::path& path);

  void add(std::string_view surface, PosTag tag);
  std::optional<PosTag> lookup(std::u32string_view surface) const;
  std::size_t max_length() const { return max_length_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::u32string, PosTag> entries_;
  std::size_t max_length_ = 0;
};

// Dictionary longest-match tokenizer. ASCII letter/digit runs become one
// token (tagged from the lexicon, case-insensitively), whitespace runs become
// kOther tokens, and scalars not covered by any entry become single-character
// tokens.
class LexiconSegmenter : public Segmenter {
 public:
  explicit LexiconSegmenter(Lexicon lexicon, std::string name = "lexicon");

  std::string identity() const override { return name_; }
  std::vector<PosTaggedToken> tag(std::string_view text) const override;

 private:
  Lexicon lexicon_;
  std::string name_;
};

// Runs the segmenter and checks its contract: tokens are contiguous, ordered
// and their surfaces concatenate to `text`. Empty text is an
// Error(kInvalidArgument); segmenter failures become ProviderError tagged
// with the segmenter identity.
std::vector<PosTaggedToken> tag_tokens(std::string_view text,
                                       const Segmenter& segmenter);

}  // namespace scda
