#include "scda/segmenter.h"

#include <cctype>

#include "scda/assets.h"
#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

std::u32string ascii_lower(std::u32string s) {
  for (char32_t& c : s) {
    if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
  }
  return s;
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "noun";
    case PosTag::kAdjective:
      return "adjective";
    case PosTag::kVerb:
      return "verb";
    case PosTag::kIdiom:
      return "idiom";
    case PosTag::kOther:
      break;
  }
  return "other";
}

PosTag parse_pos_tag(std::string_view name) {
  if (name == "noun") return PosTag::kNoun;
  if (name == "adjective" || name == "adj") return PosTag::kAdjective;
  if (name == "verb") return PosTag::kVerb;
  if (name == "idiom") return PosTag::kIdiom;
  if (name.empty()) return PosTag::kOther;
  // jieba tag families: n* nouns, a* adjectives, v* verbs, i/l idioms.
  switch (name.front()) {
    case 'n':
      return PosTag::kNoun;
    case 'a':
      return PosTag::kAdjective;
    case 'v':
      return PosTag::kVerb;
    case 'i':
    case 'l':
      return PosTag::kIdiom;
    default:
      return PosTag::kOther;
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  Lexicon lexicon;
  for_each_tsv_record(path, "lexicon", [&](const std::vector<std::string>& f) {
    if (f.size() < 2 || f[0].empty()) throw data_error("expected surface<TAB>pos");
    lexicon.add(f[0], parse_pos_tag(f[1]));
  });
  return lexicon;
}

void Lexicon::add(std::string_view surface, PosTag tag) {
  std::u32string key = utf8::decode(surface);
  if (key.empty()) throw invalid_argument("lexicon entry is empty");
  max_length_ = std::max(max_length_, key.size());
  entries_[std::move(key)] = tag;
}

std::optional<PosTag> Lexicon::lookup(std::u32string_view surface) const {
  const auto it = entries_.find(std::u32string(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

LexiconSegmenter::LexiconSegmenter(Lexicon lexicon, std::string name)
    : lexicon_(std::move(lexicon)), name_(std::move(name)) {}

std::vector<PosTaggedToken> LexiconSegmenter::tag(std::string_view text) const {
  const std::u32string s = utf8::decode(text);
  const std::u32string_view view(s);
  std::vector<PosTaggedToken> tokens;
  std::size_t i = 0;
  auto emit = [&](std::size_t end, PosTag pos) {
    tokens.push_back({utf8::encode(view.substr(i, end - i)), pos, {i, end}});
    i = end;
  };
  while (i < s.size()) {
    if (utf8::is_whitespace(s[i])) {
      std::size_t end = i;
      while (end < s.size() && utf8::is_whitespace(s[end])) ++end;
      emit(end, PosTag::kOther);
      continue;
    }
    if (utf8::is_ascii_alnum(s[i])) {
      std::size_t end = i;
      while (end < s.size() && utf8::is_ascii_alnum(s[end])) ++end;
      const auto word = view.substr(i, end - i);
      auto pos = lexicon_.lookup(word);
      if (!pos) pos = lexicon_.lookup(ascii_lower(std::u32string(word)));
      emit(end, pos.value_or(PosTag::kOther));
      continue;
    }
    const std::size_t longest = std::min(lexicon_.max_length(), s.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      if (auto pos = lexicon_.lookup(view.substr(i, len))) {
        emit(i + len, *pos);
        matched = true;
        break;
      }
    }
    if (!matched) emit(i + 1, PosTag::kOther);
  }
  return tokens;
}

std::vector<PosTaggedToken> tag_tokens(std::string_view text,
                                       const Segmenter& segmenter) {
  if (text.empty()) throw invalid_argument("tag_tokens: empty text");
  std::vector<PosTaggedToken> tokens;
  try {
    tokens = segmenter.tag(text);
  } catch (const ProviderError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProviderError(segmenter.identity(), e.what());
  }
  std::string joined;
  std::size_t offset = 0;
  for (const auto& token : tokens) {
    if (token.span.begin != offset || token.span.end <= token.span.begin ||
        utf8::length(token.surface) != token.span.length()) {
      throw ProviderError(segmenter.identity(),
                          "tokens are not contiguous at offset " +
                              std::to_string(offset));
    }
    offset = token.span.end;
    joined += token.surface;
  }
  if (joined != text) {
    throw ProviderError(segmenter.identity(),
                        "token surfaces do not reconstruct the text");
  }
  return tokens;
}

}  // namespace scda
