#include "scda/collocation.h"

#include <algorithm>

#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

bool is_space_token(const PosTaggedToken& token) {
  const std::u32string s = utf8::decode(token.surface);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char32_t c) { return utf8::is_whitespace(c); });
}

}  // namespace

std::vector<Collocation> CollocationSet::all() const {
  std::vector<Collocation> out;
  for (const auto& idiom : idioms) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Collocation& c) {
      return c.span == idiom.span;
    });
    if (!seen) out.push_back({idiom.surface, idiom.span, true, std::nullopt});
  }
  for (const auto& r : ranked) {
    const bool blocked = std::any_of(out.begin(), out.end(), [&](const Collocation& c) {
      return c.span == r.span || (c.idiom && c.span.overlaps(r.span));
    });
    if (!blocked) out.push_back({r.surface, r.span, false, r.score});
  }
  std::sort(out.begin(), out.end(), [](const Collocation& a, const Collocation& b) {
    return a.span < b.span;
  });
  return out;
}

std::vector<CandidateCollocation> extract_candidates(
    std::span<const PosTaggedToken> tokens) {
  std::vector<CandidateCollocation> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const PosTag first = tokens[i].pos;
    if (first != PosTag::kAdjective && first != PosTag::kNoun) {
      ++i;
      continue;
    }
    // Greedy scan of adjective* noun+, hopping over whitespace tokens.
    std::size_t adjectives = 0;
    std::size_t nouns = 0;
    std::size_t last = i;  // last pattern token consumed
    std::size_t j = i;
    bool in_nouns = false;
    while (j < tokens.size()) {
      std::size_t k = j;
      while (k < tokens.size() && k > i && is_space_token(tokens[k])) ++k;
      if (k >= tokens.size()) break;
      const PosTag pos = tokens[k].pos;
      if (pos == PosTag::kAdjective && !in_nouns) {
        ++adjectives;
      } else if (pos == PosTag::kNoun) {
        in_nouns = true;
        ++nouns;
      } else {
        break;
      }
      last = k;
      j = k + 1;
    }
    if (nouns == 0) {
      // Adjectives not followed by a noun; resume after them.
      i = last + 1;
      continue;
    }
    const std::size_t pattern_tokens = adjectives + nouns;
    const CharSpan span{tokens[i].span.begin, tokens[last].span.end};
    const bool lone_long_noun =
        pattern_tokens == 1 && tokens[i].span.length() >= 2;
    if (pattern_tokens >= 2 || lone_long_noun) {
      std::string surface;
      for (std::size_t t = i; t <= last; ++t) surface += tokens[t].surface;
      std::string pattern = adjectives > 0   ? "adjective-noun"
                            : nouns > 1      ? "noun-noun"
                                             : "noun";
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const auto& c) {
        return c.span == span;
      });
      if (!duplicate) out.push_back({std::move(surface), span, std::move(pattern)});
    }
    i = last + 1;
  }
  return out;
}

bool ranks_before(const RankedCollocation& a, const RankedCollocation& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
  if (a.surface != b.surface) return a.surface < b.surface;
  return a.span.end < b.span.end;
}

std::vector<RankedCollocation> rank_collocations(
    std::span<const CandidateCollocation> candidates, std::string_view text,
    const EmbeddingProvider& provider, std::size_t k,
    std::vector<std::string>* warnings) {
  if (k == 0) throw invalid_argument("rank_collocations: k must be >= 1");
  if (candidates.empty()) return {};

  std::vector<std::string> batch;
  batch.reserve(candidates.size() + 1);
  batch.emplace_back(text);
  for (const auto& c : candidates) batch.push_back(c.surface);

  std::vector<EmbeddingVector> vectors;
  try {
    vectors = provider.embed(batch);
  } catch (const ProviderError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProviderError(provider.identity(), e.what());
  }
  if (vectors.size() != batch.size()) {
    throw ProviderError(provider.identity(),
                        "returned " + std::to_string(vectors.size()) +
                            " vectors for " + std::to_string(batch.size()) +
                            " texts");
  }
  const EmbeddingVector& text_vector = vectors.front();
  if (text_vector.is_zero()) {
    throw ProviderError(provider.identity(), "zero embedding for the text");
  }

  std::vector<RankedCollocation> ranked;
  ranked.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EmbeddingVector& v = vectors[i + 1];
    if (v.dim() != text_vector.dim() || !v.is_finite()) {
      throw ProviderError(provider.identity(),
                          "inconsistent vector for '" + candidates[i].surface + "'");
    }
    if (v.is_zero()) {
      if (warnings) {
        warnings->push_back("zero embedding for candidate '" +
                            candidates[i].surface + "'; dropped");
      }
      continue;
    }
    ranked.push_back({candidates[i].surface, candidates[i].span,
                      cosine(v, text_vector)});
  }
  std::sort(ranked.begin(), ranked.end(), ranks_before);
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::vector<Idiom> extract_idioms(std::span<const PosTaggedToken> tokens) {
  std::vector<Idiom> out;
  for (const auto& token : tokens) {
    if (token.pos == PosTag::kIdiom) out.push_back({token.surface, token.span});
  }
  return out;
}

CollocationSet collocations_from_tokens(std::string_view text,
                                        std::span<const PosTaggedToken> tokens,
                                        const EmbeddingProvider& provider,
                                        std::size_t k) {
  if (k == 0) throw invalid_argument("collocations: k must be >= 1");
  CollocationSet set;
  const auto candidates = extract_candidates(tokens);
  set.ranked = rank_collocations(candidates, text, provider, k, &set.warnings);
  set.idioms = extract_idioms(tokens);
  return set;
}

CollocationSet collocations(std::string_view text, const Segmenter& segmenter,
                            const EmbeddingProvider& provider, std::size_t k) {
  if (k == 0) throw invalid_argument("collocations: k must be >= 1");
  const auto tokens = tag_tokens(text, segmenter);
  return collocations_from_tokens(text, tokens, provider, k);
}

}  // namespace scda
