#include "scda/phonetic.h"

#include <algorithm>
#include <numeric>

#include "scda/assets.h"
#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

bool is_lower_ascii(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
}

bool is_ascii_word(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

}  // namespace

PinyinTable PinyinTable::load(const std::filesystem::path& path) {
  PinyinTable table;
  for_each_tsv_record(path, "pinyin table", [&](const std::vector<std::string>& f) {
    if (f.size() < 2) throw data_error("expected char<TAB>pinyin");
    const std::u32string c = utf8::decode(f[0]);
    if (c.size() != 1) throw data_error("key must be a single character");
    table.add(c.front(), f[1]);
  });
  return table;
}

void PinyinTable::add(char32_t c, std::string syllable) {
  if (!is_lower_ascii(syllable)) {
    throw data_error("pinyin for " + utf8::codepoint_label(c) +
                     " must be lowercase ASCII: '" + syllable + "'");
  }
  table_[c] = std::move(syllable);
}

const std::string* PinyinTable::find(char32_t c) const {
  const auto it = table_.find(c);
  return it == table_.end() ? nullptr : &it->second;
}

PinyinTranscription to_pinyin(std::string_view text, const PinyinTable& table) {
  PinyinTranscription out;
  for (char32_t c : utf8::decode(text)) {
    const std::string* syllable = table.find(c);
    if (!syllable) {
      throw data_error("no pinyin for '" + utf8::encode(c) + "' (" +
                       utf8::codepoint_label(c) + ")");
    }
    out.pinyin += *syllable;
    out.syllables.push_back(*syllable);
  }
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single rolling row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

double pinyin_similarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(a, b)) /
                   static_cast<double>(longest);
}

std::vector<CharSpan> enumerate_spans(std::size_t char_count) {
  std::vector<CharSpan> spans;
  for (std::size_t width = 2; width <= 3; ++width) {
    for (std::size_t begin = 0; begin + width <= char_count; ++begin) {
      spans.push_back({begin, begin + width});
    }
  }
  return spans;
}

SymbolMap SymbolMap::load(const std::filesystem::path& path) {
  SymbolMap map;
  for_each_tsv_record(path, "symbol map", [&](const std::vector<std::string>& f) {
    if (f.empty() || f[0].empty()) throw data_error("expected symbol<TAB>fragment");
    map.add(f[0], f.size() > 1 ? f[1] : std::string());
  });
  return map;
}

void SymbolMap::add(std::string_view symbol, std::string fragment) {
  std::u32string key = utf8::decode(symbol);
  if (key.empty()) throw data_error("empty phonetic symbol");
  if (!fragment.empty() && !is_lower_ascii(fragment)) {
    throw data_error("fragment for '" + std::string(symbol) +
                     "' must be lowercase ASCII");
  }
  max_symbol_length_ = std::max(max_symbol_length_, key.size());
  fragments_[std::move(key)] = std::move(fragment);
}

std::string SymbolMap::transcribe(std::string_view phonetic) const {
  const std::u32string s = utf8::decode(phonetic);
  const std::u32string_view view(s);
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool matched = false;
    for (std::size_t len = std::min(max_symbol_length_, s.size() - i); len >= 1;
         --len) {
      const auto it = fragments_.find(std::u32string(view.substr(i, len)));
      if (it != fragments_.end()) {
        out += it->second;
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw data_error("phonetic symbol '" + utf8::encode(s[i]) + "' in '" +
                       std::string(phonetic) + "' is not in the symbol map");
    }
  }
  return out;
}

bool SymbolMap::covers(std::string_view phonetic) const {
  try {
    transcribe(phonetic);
    return true;
  } catch (const Error&) {
    return false;
  }
}

PronunciationDictionary PronunciationDictionary::load(
    const std::filesystem::path& path, const SymbolMap* symbols) {
  PronunciationDictionary dict;
  for_each_tsv_record(path, "pronunciation dictionary",
                    [&](const std::vector<std::string>& f) {
    if (f.size() < 4) {
      throw data_error("expected word<TAB>phonetic<TAB>pinyin<TAB>syllables");
    }
    int syllables = 0;
    try {
      std::size_t used = 0;
      syllables = std::stoi(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw data_error("syllable count '" + f[3] + "' is not an integer");
    }
    if (symbols && !symbols->covers(f[1])) {
      symbols->transcribe(f[1]);  // throws with the offending symbol
    }
    dict.add({f[0], f[1], f[2], syllables});
  });
  return dict;
}

void PronunciationDictionary::add(PronunciationEntry entry) {
  if (entry.word.size() < 3 || entry.word.size() > 7 ||
      !is_ascii_word(entry.word)) {
    throw data_error("word '" + entry.word + "' must have 3-7 letters");
  }
  if (entry.syllables < 2 || entry.syllables > 3) {
    throw data_error("word '" + entry.word + "' must have 2-3 syllables");
  }
  if (!is_lower_ascii(entry.pinyin_approx)) {
    throw data_error("pinyin approximation of '" + entry.word +
                     "' must be non-empty lowercase ASCII");
  }
  entries_.push_back(std::move(entry));
}

bool better_match(const HomophoneMatch& a, const HomophoneMatch& b) {
  if (a.similarity != b.similarity) return a.similarity > b.similarity;
  if (a.span.length() != b.span.length()) return a.span.length() > b.span.length();
  if (a.word != b.word) return a.word < b.word;
  return a.span.begin < b.span.begin;
}

std::optional<HomophoneMatch> find_best_homophone(
    std::span<const std::string> syllables,
    const PronunciationDictionary& dict) {
  if (dict.empty()) throw invalid_argument("pronunciation dictionary is empty");
  std::optional<HomophoneMatch> best;
  for (const CharSpan& span : enumerate_spans(syllables.size())) {
    std::string span_pinyin;
    for (std::size_t i = span.begin; i < span.end; ++i) span_pinyin += syllables[i];
    for (const auto& entry : dict.entries()) {
      HomophoneMatch candidate{span, span_pinyin, entry.word,
                               pinyin_similarity(span_pinyin, entry.pinyin_approx)};
      if (!best || better_match(candidate, *best)) best = std::move(candidate);
    }
  }
  return best;
}

std::optional<HomophoneMatch> best_homophone(std::string_view wc,
                                             const PinyinTable& table,
                                             const PronunciationDictionary& dict,
                                             double threshold) {
  if (dict.empty()) throw invalid_argument("pronunciation dictionary is empty");
  const PinyinTranscription transcription = to_pinyin(wc, table);
  auto best = find_best_homophone(transcription.syllables, dict);
  if (best && best->similarity < threshold) return std::nullopt;
  return best;
}

Outcome hmeg_augment(const TextSample& sample, const CollocationSet& colls,
                     const PinyinTable& table,
                     const PronunciationDictionary& dict, double threshold) {
  if (dict.empty()) throw invalid_argument("pronunciation dictionary is empty");
  const std::u32string text = utf8::decode(sample.text);
  if (text.size() < 2) return SkipReason::kTooShort;
  const auto all = colls.all();
  if (all.empty()) return SkipReason::kNoCollocations;

  struct Choice {
    const Collocation* collocation;
    HomophoneMatch match;
  };
  std::optional<Choice> best;
  for (const auto& collocation : all) {
    PinyinTranscription transcription;
    try {
      transcription = to_pinyin(collocation.surface, table);
    } catch (const Error&) {
      continue;  // pinyin gap: this collocation cannot be targeted
    }
    auto match = find_best_homophone(transcription.syllables, dict);
    if (!match) continue;
    // Compare in text coordinates so the final tie-break is the earliest
    // span of the whole text.
    match->span.begin += collocation.span.begin;
    match->span.end += collocation.span.begin;
    if (!best || better_match(*match, best->match)) {
      best = Choice{&collocation, std::move(*match)};
    }
  }
  if (!best) return SkipReason::kNoCollocations;
  if (best->match.similarity < threshold) return SkipReason::kBelowThreshold;

  const CharSpan replaced = best->match.span;
  const std::u32string_view view(text);
  std::string out = utf8::encode(view.substr(0, replaced.begin));
  out += best->match.word;
  out += utf8::encode(view.substr(replaced.end));

  Json meta = Json::object();
  meta["collocation"] = best->collocation->surface;
  meta["span"] = to_json(replaced);
  meta["replaced"] = utf8::encode(view.substr(replaced.begin, replaced.length()));
  meta["span_pinyin"] = best->match.span_pinyin;
  meta["word"] = best->match.word;
  meta["similarity"] = best->match.similarity;
  return make_augmented(sample, GeneratorId::kHmeg, std::move(out), std::move(meta));
}

}  // namespace scda
