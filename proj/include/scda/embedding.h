#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scda {

struct EmbeddingVector {
  std::vector<double> components;

  std::size_t dim() const { return components.size(); }
  double norm() const;
  bool is_zero() const;
  bool is_finite() const;
};

// u.v / (|u| |v|), clamped to [-1, 1]. Throws Error(kInvalidArgument) on a
// dimension mismatch, a zero vector or non-finite components.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

inline constexpr std::size_t kDefaultHashDim = 256;

// Character 1/2/3-gram feature hashing into `dim` buckets, L2-normalized.
// Each n-gram's UTF-8 bytes are hashed with FNV-1a whose basis is offset by n.
// Requires dim >= 16 and non-empty text.
EmbeddingVector hash_embed(std::string_view text,
                           std::size_t dim = kDefaultHashDim);

// Text -> vector capability. Implementations must be safe to call from
// several threads and return vectors parallel to the input batch.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string identity() const = 0;
  virtual std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) const = 0;

  EmbeddingVector embed_one(const std::string& text) const;
};

// Offline provider backed by hash_embed.
class HashEmbedder : public EmbeddingProvider {
 public:
  explicit HashEmbedder(std::size_t dim = kDefaultHashDim);

  std::string identity() const override;
  std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) const override;

  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
};

}  // namespace scda
