#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scda/embedding.h"
#include "scda/segmenter.h"
#include "scda/types.h"

namespace scda {

inline constexpr std::size_t kDefaultTopK = 5;

struct CandidateCollocation {
  std::string surface;
  CharSpan span;
  std::string pattern;  // "adjective-noun", "noun-noun" or "noun"
};

struct RankedCollocation {
  std::string surface;
  CharSpan span;
  double score = 0.0;  // cosine(embed(candidate), embed(text))
};

struct Idiom {
  std::string surface;
  CharSpan span;
};

// One element of the union view.
struct Collocation {
  std::string surface;
  CharSpan span;
  bool idiom = false;
  std::optional<double> score;
};

// Ranked pattern collocations plus idioms recognized in one text.
struct CollocationSet {
  std::vector<RankedCollocation> ranked;  // score non-increasing, size <= k
  std::vector<Idiom> idioms;
  std::vector<std::string> warnings;

  // Union ordered by span. Identical spans appear once; a ranked collocation
  // overlapping an idiom is dropped in favour of the idiom.
  std::vector<Collocation> all() const;
  bool empty() const { return ranked.empty() && idioms.empty(); }
};

// Maximal runs matching adjective* noun+ that hold at least two tokens, or a
// lone noun of at least two characters. Whitespace tokens between pattern
// tokens are absorbed into the run (so "spicy food" forms one candidate) but
// never lead or trail it.
std::vector<CandidateCollocation> extract_candidates(
    std::span<const PosTaggedToken> tokens);

// Scores every candidate against the whole text, sorts by score descending
// (ties: earlier span start, then surface) and keeps the first k. Candidates
// whose embedding is all-zero are dropped and reported through `warnings`.
std::vector<RankedCollocation> rank_collocations(
    std::span<const CandidateCollocation> candidates, std::string_view text,
    const EmbeddingProvider& provider, std::size_t k,
    std::vector<std::string>* warnings = nullptr);

// Strict total order used by rank_collocations.
bool ranks_before(const RankedCollocation& a, const RankedCollocation& b);

std::vector<Idiom> extract_idioms(std::span<const PosTaggedToken> tokens);

CollocationSet collocations(std::string_view text, const Segmenter& segmenter,
                            const EmbeddingProvider& provider, std::size_t k);

// Same, reusing an existing tokenization of `text`.
CollocationSet collocations_from_tokens(std::string_view text,
                                        std::span<const PosTaggedToken> tokens,
                                        const EmbeddingProvider& provider,
                                        std::size_t k);

}  // namespace scda
