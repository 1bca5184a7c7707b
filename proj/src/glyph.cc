#include "scda/glyph.h"

#include <algorithm>
#include <map>
#include <set>

#include "scda/assets.h"
#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

char32_t parse_codepoint(std::string_view token) {
  if (token.size() < 3 || (token.substr(0, 2) != "U+" && token.substr(0, 2) != "u+")) {
    throw data_error("codepoint '" + std::string(token) + "' must look like U+XXXX");
  }
  const std::string hex(token.substr(2));
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(hex, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != hex.size() || hex.size() > 6 ||
      !utf8::is_valid_scalar(static_cast<char32_t>(value))) {
    throw data_error("invalid codepoint '" + std::string(token) + "'");
  }
  return static_cast<char32_t>(value);
}

// Character positions covered by at least one collocation.
std::set<std::size_t> covered_positions(const std::vector<Collocation>& all) {
  std::set<std::size_t> covered;
  for (const auto& c : all) {
    for (std::size_t i = c.span.begin; i < c.span.end; ++i) covered.insert(i);
  }
  return covered;
}

// Collocation spans merged where they overlap, in order.
std::vector<CharSpan> merged_spans(const std::vector<Collocation>& all) {
  std::vector<CharSpan> spans;
  for (const auto& c : all) spans.push_back(c.span);
  std::sort(spans.begin(), spans.end());
  std::vector<CharSpan> merged;
  for (const auto& s : spans) {
    if (!merged.empty() && s.begin < merged.back().end) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

}  // namespace

EmojiDictionary EmojiDictionary::load(const std::filesystem::path& path) {
  EmojiDictionary dict;
  for_each_tsv_record(path, "emoji dictionary", [&](const std::vector<std::string>& f) {
    if (f.size() < 2) throw data_error("expected codepoints<TAB>meaning");
    std::u32string codepoints;
    std::size_t pos = 0;
    const std::string& field = f[0];
    while (pos < field.size()) {
      const auto next = field.find(' ', pos);
      const auto token = std::string_view(field).substr(
          pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!token.empty()) codepoints.push_back(parse_codepoint(token));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    dict.add(std::move(codepoints), f[1]);
  });
  return dict;
}

void EmojiDictionary::add(std::u32string codepoints, std::string meaning) {
  if (codepoints.empty()) throw data_error("emoji has no codepoints");
  for (char32_t c : codepoints) {
    if (!utf8::is_valid_scalar(c)) {
      throw data_error("invalid codepoint " + utf8::codepoint_label(c));
    }
  }
  if (utf8::trim(meaning).empty()) throw data_error("emoji meaning is empty");
  std::string emoji = utf8::encode(codepoints);
  const bool duplicate = std::any_of(entries_.begin(), entries_.end(),
                                     [&](const EmojiEntry& e) { return e.emoji == emoji; });
  if (duplicate) throw data_error("duplicate emoji " + emoji);
  entries_.push_back({std::move(codepoints), std::move(emoji), std::move(meaning)});
}

EmojiIndex::EmojiIndex(const EmojiDictionary& dictionary,
                       const EmbeddingProvider& provider)
    : dictionary_(dictionary) {
  if (dictionary.empty()) throw invalid_argument("emoji dictionary is empty");
  std::vector<std::string> meanings;
  meanings.reserve(dictionary.entries().size());
  for (const auto& e : dictionary.entries()) meanings.push_back(e.meaning);
  meanings_ = provider.embed(meanings);
  if (meanings_.size() != meanings.size()) {
    throw ProviderError(provider.identity(), "wrong number of meaning vectors");
  }
}

std::optional<EmojiIndex::Match> EmojiIndex::best(const EmbeddingVector& query) const {
  if (query.is_zero()) return std::nullopt;
  std::optional<Match> best;
  for (std::size_t i = 0; i < meanings_.size(); ++i) {
    if (meanings_[i].is_zero() || meanings_[i].dim() != query.dim()) continue;
    const double score = cosine(query, meanings_[i]);
    if (!best || score > best->similarity) best = Match{i, score};
  }
  return best;
}

std::vector<CharSpan> glyph_units(std::u32string_view text, CharSpan within) {
  std::vector<CharSpan> units;
  within.end = std::min(within.end, text.size());
  std::size_t i = within.begin;
  while (i < within.end) {
    if (utf8::is_whitespace(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    if (utf8::is_ascii_alnum(text[i])) {
      while (end < within.end && utf8::is_ascii_alnum(text[end])) ++end;
    }
    units.push_back({i, end});
    i = end;
  }
  return units;
}

Outcome eeeg_augment(const TextSample& sample, const CollocationSet& colls,
                     const EmojiIndex& index, const EmbeddingProvider& provider) {
  const auto all = colls.all();
  if (all.empty()) {
    return utf8::length(sample.text) < 2 ? SkipReason::kTooShort
                                         : SkipReason::kNoCollocations;
  }
  const std::u32string text = utf8::decode(sample.text);
  const std::u32string_view view(text);

  std::vector<CharSpan> units;
  for (const auto& span : merged_spans(all)) {
    for (const auto& unit : glyph_units(view, span)) units.push_back(unit);
  }
  if (units.empty()) return SkipReason::kNoCollocations;

  // One batch over the distinct unit strings.
  std::map<std::string, std::size_t> slot;
  std::vector<std::string> queries;
  for (const auto& unit : units) {
    const std::string s = utf8::encode(view.substr(unit.begin, unit.length()));
    if (slot.emplace(s, queries.size()).second) queries.push_back(s);
  }
  std::vector<EmbeddingVector> vectors;
  try {
    vectors = provider.embed(queries);
  } catch (const ProviderError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProviderError(provider.identity(), e.what());
  }
  if (vectors.size() != queries.size()) {
    throw ProviderError(provider.identity(), "wrong number of query vectors");
  }

  std::string out;
  Json replacements = Json::array();
  std::size_t cursor = 0;
  for (const auto& unit : units) {
    out += utf8::encode(view.substr(cursor, unit.begin - cursor));
    const std::string surface = utf8::encode(view.substr(unit.begin, unit.length()));
    const auto match = index.best(vectors[slot.at(surface)]);
    if (!match) {
      out += surface;  // zero query vector: nothing to compare against
    } else {
      const EmojiEntry& entry = index.dictionary().entries()[match->entry];
      out += entry.emoji;
      std::string labels;
      for (char32_t c : entry.codepoints) {
        if (!labels.empty()) labels += ' ';
        labels += utf8::codepoint_label(c);
      }
      Json r = Json::object();
      r["unit"] = surface;
      r["emoji"] = entry.emoji;
      r["codepoints"] = labels;
      r["similarity"] = match->similarity;
      replacements.push_back(std::move(r));
    }
    cursor = unit.end;
  }
  out += utf8::encode(view.substr(cursor));
  if (replacements.empty()) return SkipReason::kNoCollocations;

  Json meta = Json::object();
  meta["replacements"] = std::move(replacements);
  return make_augmented(sample, GeneratorId::kEeeg, std::move(out), std::move(meta));
}

RadicalTable RadicalTable::load(const std::filesystem::path& path) {
  RadicalTable table;
  for_each_tsv_record(path, "radical table", [&](const std::vector<std::string>& f) {
    if (f.size() < 2) throw data_error("expected char<TAB>components");
    const std::u32string key = utf8::decode(f[0]);
    if (key.size() != 1) throw data_error("key must be a single character");
    table.add(key.front(), utf8::decode(f[1]));
  });
  return table;
}

void RadicalTable::add(char32_t c, std::u32string components) {
  if (components.size() < 2) {
    throw data_error("decomposition of " + utf8::encode(c) +
                     " needs at least two components");
  }
  if (std::any_of(components.begin(), components.end(),
                  [](char32_t x) { return utf8::is_whitespace(x); })) {
    throw data_error("decomposition of " + utf8::encode(c) + " contains whitespace");
  }
  table_[c] = std::move(components);
}

const std::u32string* RadicalTable::find(char32_t c) const {
  const auto it = table_.find(c);
  return it == table_.end() ? nullptr : &it->second;
}

Outcome deg_augment(const TextSample& sample, const CollocationSet& colls,
                    const RadicalTable& table) {
  const auto all = colls.all();
  if (all.empty()) {
    return utf8::length(sample.text) < 2 ? SkipReason::kTooShort
                                         : SkipReason::kNoCollocations;
  }
  const std::u32string text = utf8::decode(sample.text);
  const auto covered = covered_positions(all);

  std::u32string out;
  Json expansions = Json::array();
  for (std::size_t i = 0; i < text.size(); ++i) {
    const std::u32string* components = covered.count(i) ? table.find(text[i]) : nullptr;
    if (!components) {
      out.push_back(text[i]);
      continue;
    }
    out += *components;
    Json e = Json::object();
    e["position"] = i;
    e["char"] = utf8::encode(text[i]);
    e["components"] = utf8::encode(*components);
    expansions.push_back(std::move(e));
  }
  if (expansions.empty()) return SkipReason::kNoCollocations;
  Json meta = Json::object();
  meta["expansions"] = std::move(expansions);
  return make_augmented(sample, GeneratorId::kDeg, utf8::encode(out), std::move(meta));
}

}  // namespace scda
