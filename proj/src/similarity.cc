#include "scda/similarity.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

#include "scda/error.h"

namespace scda {

std::vector<SimilarityRow> similarity_report(
    const std::vector<TextSample>& originals,
    const std::vector<AugmentedSample>& augmented,
    const EmbeddingProvider& embedder) {
  std::unordered_map<std::string, const TextSample*> by_id;
  for (const auto& s : originals) by_id.emplace(s.id, &s);

  std::vector<std::string> orphans;
  for (const auto& a : augmented) {
    if (!by_id.count(a.source_id)) orphans.push_back(a.source_id);
  }
  if (!orphans.empty()) {
    std::string list;
    for (const auto& id : orphans) list += (list.empty() ? "" : ", ") + id;
    throw data_error("augmented records reference unknown ids: " + list);
  }

  std::map<GeneratorId, std::vector<double>> scores;
  for (const auto& a : augmented) {
    const std::string texts[2] = {by_id.at(a.source_id)->text, a.text};
    const auto v = embedder.embed(texts);
    if (v.size() != 2) throw ProviderError(embedder.identity(), "wrong number of vectors");
    scores[a.generator].push_back(cosine(v[0], v[1]));
  }

  std::vector<SimilarityRow> rows;
  for (const auto& [generator, values] : scores) {
    SimilarityRow row;
    row.generator = generator;
    row.count = values.size();
    double sum = 0.0;
    for (double x : values) sum += x;
    row.mean = sum / static_cast<double>(values.size());
    double squares = 0.0;
    for (double x : values) squares += (x - row.mean) * (x - row.mean);
    row.std = std::sqrt(squares / static_cast<double>(values.size()));
    if (generator == GeneratorId::kMdeeg) {
      row.reference_mean = kMdeegReferenceMean;
      row.reference_std = kMdeegReferenceStd;
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const std::vector<SimilarityRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::object();
    r["generator"] = std::string(to_string(row.generator));
    r["count"] = row.count;
    r["mean"] = row.mean;
    r["std"] = row.std;
    r["reference_mean"] = row.reference_mean ? Json(*row.reference_mean) : Json(nullptr);
    r["reference_std"] = row.reference_std ? Json(*row.reference_std) : Json(nullptr);
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_similarity_table(const std::vector<SimilarityRow>& rows) {
  auto fixed = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return std::string(buf);
  };
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-9s %7s %8s %8s %10s %9s\n", "generator",
                "count", "mean", "std", "ref_mean", "ref_std");
  out << line;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%-9s %7zu %8s %8s %10s %9s\n",
                  std::string(to_string(row.generator)).c_str(), row.count,
                  fixed(row.mean).c_str(), fixed(row.std).c_str(),
                  row.reference_mean ? fixed(*row.reference_mean).c_str() : "-",
                  row.reference_std ? fixed(*row.reference_std).c_str() : "-");
    out << line;
  }
  return out.str();
}

}  // namespace scda
