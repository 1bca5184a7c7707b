#include "scda/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "scda/error.h"
#include "scda/glyph.h"
#include "scda/phonetic.h"
#include "scda/random.h"
#include "scda/remote.h"
#include "scda/utf8.h"

namespace scda {
namespace {

std::string dump(const Json& json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::strict);
}

std::string join(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += p;
  return out;
}

}  // namespace

void PipelineConfig::validate() const {
  if (generators.empty()) throw config_error("no generators enabled");
  if (top_k == 0) throw config_error("top-k must be >= 1");
  if (!(hmeg_threshold >= 0.0 && hmeg_threshold <= 1.0)) {
    throw config_error("HMEG threshold must lie in [0, 1]");
  }
  if (jobs == 0) throw config_error("jobs must be >= 1");
  for (const auto& [name, path] : assets.named()) {
    if (!std::filesystem::is_regular_file(path)) {
      throw config_error("asset '" + name + "' not found at " + path.string());
    }
  }
}

Json PipelineConfig::to_json() const {
  Json json = Json::object();
  Json names = Json::array();
  for (GeneratorId id : kAllGenerators) {
    if (enabled(id)) names.push_back(std::string(to_string(id)));
  }
  json["generators"] = std::move(names);
  json["top_k"] = top_k;
  json["seed"] = seed.master_seed;
  json["embedder"] = embedder;
  json["summarizer"] = summarizer;
  json["hmeg_threshold"] = hmeg_threshold;
  return json;
}

std::string PipelineConfig::hash() const { return sha256_hex(dump(to_json())); }

bool PipelineConfig::enabled(GeneratorId id) const {
  return std::find(generators.begin(), generators.end(), id) != generators.end();
}

std::vector<GeneratorId> parse_generator_list(std::string_view list) {
  std::vector<GeneratorId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto name = list.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start);
    if (!name.empty()) {
      const auto id = parse_generator(name);
      if (!id) throw config_error("unknown generator '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::unique_ptr<EmbeddingProvider> make_embedder(const std::string& spec) {
  if (spec == "builtin") return std::make_unique<HashEmbedder>();
  if (spec.rfind("http://", 0) == 0) {
    return std::make_unique<remote::HttpEmbeddingProvider>(spec);
  }
  throw config_error("embedder must be 'builtin' or an http:// URL, got '" + spec + "'");
}

std::unique_ptr<SummarizerClient> make_summarizer(const std::string& spec) {
  if (spec == "fallback") return nullptr;
  if (spec.rfind("http://", 0) == 0) {
    return std::make_unique<remote::HttpSummarizer>(spec);
  }
  throw config_error("summarizer must be 'fallback' or an http:// URL, got '" +
                     spec + "'");
}

Json to_json(const SkipRecord& skip) {
  Json json = Json::object();
  json["source_id"] = skip.source_id;
  json["generator"] = std::string(to_string(skip.generator));
  json["reason"] = std::string(to_string(skip.reason));
  return json;
}

SkipRecord skip_from_json(const Json& record) {
  try {
    SkipRecord skip;
    skip.source_id = record.at("source_id").get<std::string>();
    const auto generator = parse_generator(record.at("generator").get<std::string>());
    const auto reason = parse_skip_reason(record.at("reason").get<std::string>());
    if (!generator || !reason) throw data_error("unknown generator or reason");
    skip.generator = *generator;
    skip.reason = *reason;
    return skip;
  } catch (const Json::exception& e) {
    throw data_error(std::string("skip record: ") + e.what());
  }
}

Augmenter::Augmenter(const PipelineConfig& config, const AssetBundle& assets,
                     const EmbeddingProvider& embedder,
                     const SummarizerClient* summarizer)
    : config_(config),
      assets_(assets),
      embedder_(embedder),
      summarizer_(summarizer),
      segmenter_(assets.lexicon),
      parser_(segmenter_),
      fallback_(embedder) {
  if (config.enabled(GeneratorId::kEeeg)) emoji_index_.emplace(assets.emoji, embedder);
}

SampleResult Augmenter::process(const TextSample& sample) const {
  SampleResult result;
  auto record = [&](GeneratorId generator, Outcome outcome) {
    if (auto* skip = std::get_if<SkipReason>(&outcome)) {
      result.skips.push_back({sample.id, generator, *skip});
    } else {
      result.augmented.push_back(std::move(std::get<AugmentedSample>(outcome)));
    }
  };
  auto provider_failure = [&](GeneratorId generator) {
    ++result.provider_errors;
    result.skips.push_back(
        {sample.id, generator, SkipReason::kProviderErrorFallbackUnavailable});
  };

  const auto tokens = tag_tokens(sample.text, segmenter_);
  std::optional<CollocationSet> colls;
  bool colls_failed = false;
  const bool needs_colls =
      config_.enabled(GeneratorId::kSpeg) || config_.enabled(GeneratorId::kHmeg) ||
      config_.enabled(GeneratorId::kEeeg) || config_.enabled(GeneratorId::kDeg);
  if (needs_colls) {
    try {
      colls = collocations_from_tokens(sample.text, tokens, embedder_, config_.top_k);
      result.warnings += colls->warnings.size();
    } catch (const ProviderError&) {
      colls_failed = true;
      ++result.provider_errors;
    }
  }

  for (GeneratorId generator : kAllGenerators) {
    if (!config_.enabled(generator)) continue;
    const bool uses_colls = generator != GeneratorId::kIreg &&
                            generator != GeneratorId::kMdeeg;
    if (uses_colls && colls_failed) {
      result.skips.push_back(
          {sample.id, generator, SkipReason::kProviderErrorFallbackUnavailable});
      continue;
    }
    switch (generator) {
      case GeneratorId::kSpeg: {
        RandomStream rng = derive_rng(config_.seed, sample.id, generator);
        record(generator, speg_augment(sample, &parser_, *colls, rng));
        break;
      }
      case GeneratorId::kHmeg:
        record(generator, hmeg_augment(sample, *colls, assets_.pinyin,
                                       assets_.pronunciation, config_.hmeg_threshold));
        break;
      case GeneratorId::kEeeg:
        try {
          record(generator, eeeg_augment(sample, *colls, *emoji_index_, embedder_));
        } catch (const ProviderError&) {
          provider_failure(generator);
        }
        break;
      case GeneratorId::kIreg: {
        RandomStream rng = derive_rng(config_.seed, sample.id, generator);
        std::vector<std::string> segments;
        segments.reserve(tokens.size());
        for (const auto& t : tokens) segments.push_back(t.surface);
        auto outcome = ireg_augment_segments(sample, segments, rng);
        if (auto* r = std::get_if<IregResult>(&outcome)) {
          record(generator, std::move(r->sample));
        } else {
          record(generator, std::get<SkipReason>(outcome));
        }
        break;
      }
      case GeneratorId::kDeg:
        record(generator, deg_augment(sample, *colls, assets_.radicals));
        break;
      case GeneratorId::kMdeeg:
        try {
          AugmentedSample out = mdeeg_augment(sample, summarizer_, fallback_);
          if (out.meta.contains("fallback_reason")) ++result.summarizer_fallbacks;
          record(generator, std::move(out));
        } catch (const ProviderError&) {
          provider_failure(generator);
        }
        break;
    }
  }
  return result;
}

Json RunManifest::to_json() const {
  Json json = Json::object();
  json["config_hash"] = config_hash;
  json["asset_digests"] = Json::object();
  for (const auto& [name, digest] : asset_digests) json["asset_digests"][name] = digest;
  json["samples"] = samples;
  Json per = Json::object();
  for (const auto& [generator, c] : counts) {
    Json entry = Json::object();
    entry["augmented"] = c.augmented;
    entry["skipped"] = c.skipped;
    per[std::string(to_string(generator))] = std::move(entry);
  }
  json["counts"] = std::move(per);
  json["provider_errors"] = provider_errors;
  json["warnings"] = warnings;
  json["summarizer_fallbacks"] = summarizer_fallbacks;
  json["wall_seconds"] = wall_seconds;
  return json;
}

RunManifest run_augment(const PipelineConfig& config, const AssetBundle& assets,
                        const EmbeddingProvider& embedder,
                        const SummarizerClient* summarizer,
                        const SampleSource& source, std::ostream& augmented_out,
                        std::ostream& skips_out) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const Augmenter augmenter(config, assets, embedder, summarizer);

  RunManifest manifest;
  manifest.config_hash = config.hash();
  manifest.asset_digests = assets.digests;
  for (GeneratorId id : kAllGenerators) {
    if (config.enabled(id)) manifest.counts[id] = {};
  }

  const std::size_t batch_size = std::max<std::size_t>(64, config.jobs * 16);
  std::vector<TextSample> batch;
  std::vector<SampleResult> results;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto sample = source();
      if (!sample) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*sample));
    }
    if (batch.empty()) break;

    results.assign(batch.size(), {});
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
        try {
          results[i] = augmenter.process(batch[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const std::size_t workers = std::min(config.jobs, batch.size());
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& r : results) {
      for (const auto& a : r.augmented) {
        write_augmented(augmented_out, a);
        ++manifest.counts[a.generator].augmented;
      }
      for (const auto& s : r.skips) {
        skips_out << dump(to_json(s)) << '\n';
        ++manifest.counts[s.generator].skipped;
      }
      manifest.provider_errors += r.provider_errors;
      manifest.warnings += r.warnings;
      manifest.summarizer_fallbacks += r.summarizer_fallbacks;
    }
    manifest.samples += batch.size();
  }
  augmented_out.flush();
  skips_out.flush();
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return manifest;
}

RunManifest run_augment(const PipelineConfig& config, const AssetBundle& assets,
                        const EmbeddingProvider& embedder,
                        const SummarizerClient* summarizer,
                        const std::vector<TextSample>& corpus,
                        std::ostream& augmented_out, std::ostream& skips_out) {
  std::size_t next = 0;
  const SampleSource source = [&]() -> std::optional<TextSample> {
    if (next >= corpus.size()) return std::nullopt;
    return corpus[next++];
  };
  return run_augment(config, assets, embedder, summarizer, source, augmented_out,
                     skips_out);
}

std::filesystem::path skips_path_for(const std::filesystem::path& output) {
  auto p = output;
  return p.replace_extension(".skips.jsonl");
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  return p.replace_extension(".manifest.json");
}

StatsResult run_stats(const std::vector<TextSample>& originals,
                      const std::vector<AugmentedSample>& augmented,
                      const EmbeddingProvider& embedder) {
  StatsResult result;
  result.rows = similarity_report(originals, augmented, embedder);
  result.json = to_json(result.rows);
  result.table = render_similarity_table(result.rows);
  return result;
}

Json VerifyReport::to_json() const {
  Json json = Json::object();
  json["checked"] = checked;
  json["passed"] = passed;
  json["failed"] = failed;
  json["unverifiable"] = unverifiable;
  json["ignored"] = ignored;
  Json list = Json::array();
  for (const auto& f : failures) {
    Json entry = Json::object();
    entry["source_id"] = f.source_id;
    entry["reason"] = f.reason;
    list.push_back(std::move(entry));
  }
  json["failures"] = std::move(list);
  return json;
}

VerifyReport run_verify(const std::vector<AugmentedSample>& augmented,
                        const std::vector<TextSample>* originals) {
  std::unordered_map<std::string, const TextSample*> by_id;
  if (originals) {
    for (const auto& s : *originals) by_id.emplace(s.id, &s);
  }
  VerifyReport report;
  for (const auto& record : augmented) {
    if (record.generator != GeneratorId::kIreg) {
      ++report.ignored;
      continue;
    }
    ++report.checked;
    PermutationRecord permutation;
    try {
      permutation = permutation_from_json(record.meta);
    } catch (const Error& e) {
      ++report.unverifiable;
      report.failures.push_back({record.source_id, std::string("unverifiable: ") + e.what()});
      continue;
    }
    std::string reason;
    const auto forward = apply_permutation(permutation.mapping, permutation.bases);
    if (!is_involution(permutation)) {
      reason = "mapping is not an involution";
    } else if (join(forward) != record.text) {
      reason = "mapping applied to the bases does not give the augmented text";
    } else if (apply_permutation(permutation.mapping, forward) != permutation.bases) {
      reason = "re-applying the mapping does not restore the bases";
    } else if (originals) {
      const auto it = by_id.find(record.source_id);
      if (it == by_id.end()) {
        ++report.unverifiable;
        report.failures.push_back({record.source_id, "unverifiable: unknown source id"});
        continue;
      }
      if (join(apply_permutation(permutation.mapping, forward)) != it->second->text) {
        reason = "restored text differs from the original";
      }
    }
    if (reason.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back({record.source_id, reason});
    }
  }
  return report;
}

std::vector<ThemeContentPair> load_raw_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open " + path.string());
  std::vector<ThemeContentPair> pairs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_number) + ": ";
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw data_error(where + "invalid JSON: " + e.what());
    }
    if (!record.is_object() || !record.contains("theme") ||
        !record.contains("content") || !record["theme"].is_string() ||
        !record["content"].is_string()) {
      throw data_error(where + "expected {\"theme\": str, \"content\": str}");
    }
    pairs.push_back({record["theme"].get<std::string>(),
                     record["content"].get<std::string>()});
  }
  return pairs;
}

PrepResult run_prep(const std::vector<ThemeContentPair>& raw,
                    const StreamMarkers& markers, const CleaningOptions& options) {
  PrepResult result;
  result.pairs = clean_corpus(raw, &result.report, options);
  if (!result.pairs.empty()) result.stream = format_training(result.pairs, markers);
  return result;
}

}  // namespace scda
