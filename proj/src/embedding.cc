#include "scda/embedding.h"

#include <algorithm>
#include <cmath>

#include "scda/error.h"
#include "scda/random.h"
#include "scda/utf8.h"

namespace scda {

double EmbeddingVector::norm() const {
  double sum = 0.0;
  for (double x : components) sum += x * x;
  return std::sqrt(sum);
}

bool EmbeddingVector::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](double x) { return x == 0.0; });
}

bool EmbeddingVector::is_finite() const {
  return std::all_of(components.begin(), components.end(),
                     [](double x) { return std::isfinite(x); });
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    throw invalid_argument("cosine: dimension mismatch (" +
                           std::to_string(u.dim()) + " vs " +
                           std::to_string(v.dim()) + ")");
  }
  if (!u.is_finite() || !v.is_finite()) {
    throw invalid_argument("cosine: non-finite component");
  }
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) {
    throw invalid_argument("cosine: similarity undefined for a zero vector");
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    dot += u.components[i] * v.components[i];
  }
  return std::clamp(dot / (nu * nv), -1.0, 1.0);
}

EmbeddingVector hash_embed(std::string_view text, std::size_t dim) {
  if (dim < 16) throw invalid_argument("hash_embed: dimension must be >= 16");
  const std::u32string scalars = utf8::decode(text);
  if (scalars.empty()) throw invalid_argument("hash_embed: empty text");

  EmbeddingVector v;
  v.components.assign(dim, 0.0);
  for (std::size_t n = 1; n <= 3; ++n) {
    if (scalars.size() < n) break;
    const std::uint64_t basis = 0xcbf29ce484222325ULL ^ n;
    for (std::size_t i = 0; i + n <= scalars.size(); ++i) {
      const std::string gram =
          utf8::encode(std::u32string_view(scalars).substr(i, n));
      v.components[fnv1a64(gram, basis) % dim] += 1.0;
    }
  }
  const double norm = v.norm();
  for (double& x : v.components) x /= norm;
  return v;
}

EmbeddingVector EmbeddingProvider::embed_one(const std::string& text) const {
  auto out = embed(std::span<const std::string>(&text, 1));
  if (out.size() != 1) {
    throw ProviderError(identity(), "expected one vector, got " +
                                        std::to_string(out.size()));
  }
  return std::move(out.front());
}

HashEmbedder::HashEmbedder(std::size_t dim) : dim_(dim) {
  if (dim < 16) throw invalid_argument("HashEmbedder: dimension must be >= 16");
}

std::string HashEmbedder::identity() const {
  return "builtin-hash/" + std::to_string(dim_);
}

std::vector<EmbeddingVector> HashEmbedder::embed(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back(hash_embed(text, dim_));
  return out;
}

}  // namespace scda
