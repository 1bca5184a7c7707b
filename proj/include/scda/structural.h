#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scda/collocation.h"
#include "scda/permutation.h"
#include "scda/random.h"
#include "scda/segmenter.h"
#include "scda/types.h"

namespace scda {

struct Clause {
  std::string text;
  CharSpan span;          // within the parent text
  std::string delimiter;  // following delimiter; empty for the last clause
};

// Splits on '，' and ','. Lossless: reconstruct(split_clauses(t)) == t.
std::vector<Clause> split_clauses(std::string_view text);
std::string reconstruct(const std::vector<Clause>& clauses);

// Spans are relative to the parsed clause.
struct DependencyParseResult {
  std::optional<CharSpan> subject;
  std::optional<CharSpan> object;
};

class DependencyParser {
 public:
  virtual ~DependencyParser() = default;

  virtual std::string identity() const = 0;
  virtual DependencyParseResult parse(std::string_view clause) const = 0;
};

// Offline stand-in: the first noun run before the first verb is the subject,
// the first noun run after it is the object.
class HeuristicDependencyParser : public DependencyParser {
 public:
  explicit HeuristicDependencyParser(const Segmenter& segmenter)
      : segmenter_(segmenter) {}

  std::string identity() const override { return "heuristic-dependency"; }
  DependencyParseResult parse(std::string_view clause) const override;

 private:
  const Segmenter& segmenter_;
};

// Spoonerism: per clause, swap subject and object when the parser finds
// both; otherwise swap one uniformly chosen pair of non-overlapping
// collocations lying inside the clause. A parser that throws or returns
// invalid spans degrades to the collocation path. `parser` may be null.
Outcome speg_augment(const TextSample& sample, const DependencyParser* parser,
                     const CollocationSet& colls, RandomStream& rng);

// Discrete inter-run gap distribution, in whole segments. Masses are kept
// as integer per-mille weights so that they sum to exactly one.
struct SwapGapDistribution {
  static constexpr std::array<std::size_t, 3> kPerMille = {764, 218, 18};

  static double mass(std::size_t gap);
  static std::size_t draw(RandomStream& rng);
};

inline constexpr int kGapRedraws = 8;
inline constexpr std::size_t kMaxRunSegments = 3;

std::vector<std::string> segment(std::string_view text,
                                 const Segmenter& segmenter);

struct IregResult {
  AugmentedSample sample;
  PermutationRecord permutation;
};

using IregOutcome = std::variant<IregResult, SkipReason>;

// Exchanges two non-overlapping runs of 1-3 segments separated by a gap
// drawn from SwapGapDistribution. Infeasible gaps are redrawn up to
// kGapRedraws times, then the gap falls back to 0.
IregOutcome ireg_augment(const TextSample& sample, const Segmenter& segmenter,
                         RandomStream& rng);

// Same, on an existing segmentation of sample.text.
IregOutcome ireg_augment_segments(const TextSample& sample,
                                  const std::vector<std::string>& segments,
                                  RandomStream& rng);

}  // namespace scda
