#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scda/embedding.h"
#include "scda/types.h"

namespace scda {

struct SimilarityRow {
  GeneratorId generator = GeneratorId::kSpeg;
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  // Published comparison point, shown next to the measurement only.
  std::optional<double> reference_mean;
  std::optional<double> reference_std;
};

// Reference similarity published for the theme-summary generator.
inline constexpr double kMdeegReferenceMean = 0.4868;
inline constexpr double kMdeegReferenceStd = 0.0417;

// Per-generator mean/std of cosine(embed(T), embed(T')). Rows follow
// generator order; generators without records are omitted. Records whose
// source_id is missing from `originals` raise Error(kData) listing them.
std::vector<SimilarityRow> similarity_report(
    const std::vector<TextSample>& originals,
    const std::vector<AugmentedSample>& augmented,
    const EmbeddingProvider& embedder);

Json to_json(const std::vector<SimilarityRow>& rows);
std::string render_similarity_table(const std::vector<SimilarityRow>& rows);

}  // namespace scda
