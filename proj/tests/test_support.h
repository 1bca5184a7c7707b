#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scda/assets.h"
#include "scda/embedding.h"
#include "scda/error.h"

namespace scda::testing {

inline std::filesystem::path assets_dir() { return SCDA_TEST_ASSETS_DIR; }
inline std::filesystem::path data_dir() { return SCDA_TEST_DATA_DIR; }

// Bundled assets, loaded once per process.
inline const AssetBundle& bundled_assets() {
  static const AssetBundle bundle =
      AssetBundle::load(AssetPaths::in_directory(assets_dir()));
  return bundle;
}

// Returns fixed vectors for known texts; anything else is a provider error.
class TableEmbedder : public EmbeddingProvider {
 public:
  explicit TableEmbedder(std::map<std::string, std::vector<double>> table)
      : table_(std::move(table)) {}
  std::string identity() const override { return "table"; }
  std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) const override {
    std::vector<EmbeddingVector> out;
    for (const auto& t : texts) {
      const auto it = table_.find(t);
      if (it == table_.end()) throw ProviderError("table", "unknown text " + t);
      out.push_back({it->second});
    }
    return out;
  }

 private:
  std::map<std::string, std::vector<double>> table_;
};

// Always fails.
class DownEmbedder : public EmbeddingProvider {
 public:
  std::string identity() const override { return "down"; }
  std::vector<EmbeddingVector> embed(std::span<const std::string>) const override {
    throw ProviderError("down", "connection refused");
  }
};

}  // namespace scda::testing
