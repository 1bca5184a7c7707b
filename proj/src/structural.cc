#include "scda/structural.h"

#include <algorithm>

#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

bool is_clause_delimiter(char32_t c) { return c == U'，' || c == U','; }

bool is_space_token(const PosTaggedToken& token) {
  const std::u32string s = utf8::decode(token.surface);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char32_t c) {
    return utf8::is_whitespace(c);
  });
}

// First run of noun tokens (whitespace allowed between them) in
// tokens[from, to).
std::optional<CharSpan> first_noun_run(const std::vector<PosTaggedToken>& tokens,
                                       std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (tokens[i].pos != PosTag::kNoun) continue;
    std::size_t last = i;
    for (std::size_t j = i + 1; j < to; ++j) {
      if (tokens[j].pos == PosTag::kNoun) {
        last = j;
      } else if (!is_space_token(tokens[j])) {
        break;
      }
    }
    return CharSpan{tokens[i].span.begin, tokens[last].span.end};
  }
  return std::nullopt;
}

bool valid_parse(const DependencyParseResult& r, std::size_t clause_length) {
  if (!r.subject || !r.object) return false;
  const CharSpan& s = *r.subject;
  const CharSpan& o = *r.object;
  return !s.empty() && !o.empty() && s.end <= clause_length &&
         o.end <= clause_length && !s.overlaps(o);
}

// P A M B S -> P B M A S, with a.begin < b.begin.
std::u32string swap_spans(std::u32string_view s, CharSpan a, CharSpan b) {
  if (b.begin < a.begin) std::swap(a, b);
  std::u32string out;
  out.reserve(s.size());
  out += s.substr(0, a.begin);
  out += s.substr(b.begin, b.length());
  out += s.substr(a.end, b.begin - a.end);
  out += s.substr(a.begin, a.length());
  out += s.substr(b.end);
  return out;
}

}  // namespace

std::vector<Clause> split_clauses(std::string_view text) {
  const std::u32string s = utf8::decode(text);
  const std::u32string_view view(s);
  std::vector<Clause> clauses;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && !is_clause_delimiter(s[i])) continue;
    Clause clause;
    clause.text = utf8::encode(view.substr(begin, i - begin));
    clause.span = {begin, i};
    if (i < s.size()) clause.delimiter = utf8::encode(s[i]);
    clauses.push_back(std::move(clause));
    begin = i + 1;
  }
  return clauses;
}

std::string reconstruct(const std::vector<Clause>& clauses) {
  std::string out;
  for (const auto& clause : clauses) out += clause.text + clause.delimiter;
  return out;
}

DependencyParseResult HeuristicDependencyParser::parse(
    std::string_view clause) const {
  DependencyParseResult result;
  if (clause.empty()) return result;
  const auto tokens = tag_tokens(clause, segmenter_);
  const auto verb = std::find_if(tokens.begin(), tokens.end(), [](const auto& t) {
    return t.pos == PosTag::kVerb;
  });
  if (verb == tokens.end()) return result;
  const auto verb_index = static_cast<std::size_t>(verb - tokens.begin());
  result.subject = first_noun_run(tokens, 0, verb_index);
  result.object = first_noun_run(tokens, verb_index + 1, tokens.size());
  return result;
}

Outcome speg_augment(const TextSample& sample, const DependencyParser* parser,
                     const CollocationSet& colls, RandomStream& rng) {
  if (utf8::length(sample.text) < 2) return SkipReason::kTooShort;
  const auto all = colls.all();
  auto clauses = split_clauses(sample.text);

  Json swaps = Json::array();
  std::size_t parser_errors = 0;
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    Clause& clause = clauses[ci];
    const std::u32string chars = utf8::decode(clause.text);
    if (chars.empty()) continue;

    std::optional<std::pair<CharSpan, CharSpan>> chosen;
    std::string mode;
    if (parser) {
      try {
        const auto parsed = parser->parse(clause.text);
        if (valid_parse(parsed, chars.size())) {
          chosen.emplace(*parsed.subject, *parsed.object);
          mode = "subject_object";
        }
      } catch (const std::exception&) {
        ++parser_errors;
      }
    }
    if (!chosen) {
      std::vector<CharSpan> inside;
      for (const auto& c : all) {
        if (clause.span.contains(c.span) && !c.span.empty()) {
          inside.push_back({c.span.begin - clause.span.begin,
                            c.span.end - clause.span.begin});
        }
      }
      std::vector<std::pair<CharSpan, CharSpan>> pairs;
      for (std::size_t i = 0; i < inside.size(); ++i) {
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
          if (!inside[i].overlaps(inside[j])) pairs.emplace_back(inside[i], inside[j]);
        }
      }
      if (!pairs.empty()) {
        chosen = pairs[rng.uniform_index(pairs.size())];
        mode = "collocation";
      }
    }
    if (!chosen) continue;

    auto [first, second] = *chosen;
    if (second.begin < first.begin) std::swap(first, second);
    const std::u32string_view view(chars);
    Json swap = Json::object();
    swap["clause"] = ci;
    swap["mode"] = mode;
    swap["first"] = utf8::encode(view.substr(first.begin, first.length()));
    swap["second"] = utf8::encode(view.substr(second.begin, second.length()));
    swap["first_span"] = to_json(CharSpan{first.begin + clause.span.begin,
                                          first.end + clause.span.begin});
    swap["second_span"] = to_json(CharSpan{second.begin + clause.span.begin,
                                           second.end + clause.span.begin});
    swaps.push_back(std::move(swap));
    clause.text = utf8::encode(swap_spans(view, first, second));
  }

  std::string out = reconstruct(clauses);
  if (out == sample.text) return SkipReason::kNoCollocations;
  Json meta = Json::object();
  meta["swaps"] = std::move(swaps);
  meta["parser"] = parser ? Json(parser->identity()) : Json(nullptr);
  meta["parser_errors"] = parser_errors;
  return make_augmented(sample, GeneratorId::kSpeg, std::move(out), std::move(meta));
}

double SwapGapDistribution::mass(std::size_t gap) {
  if (gap >= kPerMille.size()) return 0.0;
  return static_cast<double>(kPerMille[gap]) / 1000.0;
}

std::size_t SwapGapDistribution::draw(RandomStream& rng) {
  std::size_t u = rng.uniform_index(1000);
  for (std::size_t gap = 0; gap < kPerMille.size(); ++gap) {
    if (u < kPerMille[gap]) return gap;
    u -= kPerMille[gap];
  }
  return kPerMille.size() - 1;  // unreachable: weights sum to 1000
}

std::vector<std::string> segment(std::string_view text,
                                 const Segmenter& segmenter) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  for (auto& token : tag_tokens(text, segmenter)) out.push_back(std::move(token.surface));
  return out;
}

IregOutcome ireg_augment_segments(const TextSample& sample,
                                  const std::vector<std::string>& segments,
                                  RandomStream& rng) {
  const std::size_t n = segments.size();
  if (n < 2) return SkipReason::kTooShort;

  std::size_t gap = SwapGapDistribution::draw(rng);
  for (int redraw = 0; redraw < kGapRedraws && gap + 2 > n; ++redraw) {
    gap = SwapGapDistribution::draw(rng);
  }
  if (gap + 2 > n) gap = 0;

  const std::size_t first_len =
      rng.uniform_between(1, std::min(kMaxRunSegments, n - gap - 1));
  const std::size_t second_len =
      rng.uniform_between(1, std::min(kMaxRunSegments, n - gap - first_len));
  const std::size_t start = rng.uniform_between(0, n - (first_len + gap + second_len));

  const std::size_t gap_begin = start + first_len;
  const std::size_t second_begin = gap_begin + gap;
  const std::size_t suffix_begin = second_begin + second_len;

  auto join = [&](std::size_t b, std::size_t e) {
    std::string s;
    for (std::size_t i = b; i < e; ++i) s += segments[i];
    return s;
  };

  // Swap units: every untouched segment is its own base and each run is
  // collapsed into one base, so the rearrangement is a single transposition.
  std::vector<std::string> bases;
  for (std::size_t i = 0; i < start; ++i) bases.push_back(segments[i]);
  const std::size_t first_base = bases.size();
  bases.push_back(join(start, gap_begin));
  for (std::size_t i = gap_begin; i < second_begin; ++i) bases.push_back(segments[i]);
  const std::size_t second_base = bases.size();
  bases.push_back(join(second_begin, suffix_begin));
  for (std::size_t i = suffix_begin; i < n; ++i) bases.push_back(segments[i]);

  PermutationRecord record;
  record.source_id = sample.id;
  record.mapping.resize(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) record.mapping[i] = i;
  std::swap(record.mapping[first_base], record.mapping[second_base]);
  record.bases = std::move(bases);

  std::string out;
  for (const auto& piece : apply_permutation(record.mapping, record.bases)) out += piece;

  Json meta = Json::object();
  meta["gap"] = gap;
  meta["first_run"] = Json::array({start, gap_begin});
  meta["second_run"] = Json::array({second_begin, suffix_begin});
  const Json permutation = to_json(record);
  meta["bases"] = permutation["bases"];
  meta["mapping"] = permutation["mapping"];

  IregResult result{make_augmented(sample, GeneratorId::kIreg, std::move(out),
                                   std::move(meta)),
                    std::move(record)};
  return result;
}

IregOutcome ireg_augment(const TextSample& sample, const Segmenter& segmenter,
                         RandomStream& rng) {
  return ireg_augment_segments(sample, segment(sample.text, segmenter), rng);
}

}  // namespace scda
