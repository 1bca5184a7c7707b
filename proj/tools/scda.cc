// Command-line front end: augment, stats, verify, prep.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scda/corpus.h"
#include "scda/error.h"
#include "scda/pipeline.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kConfigExit = 1, kDataExit = 2, kProviderExit = 3 };

struct Options {
  std::string input;
  std::string output;
  std::string originals;
  std::string report;
  std::string generators = "speg,hmeg,eeeg,ireg,deg,mdeeg";
  std::uint64_t seed = 0;
  std::size_t top_k = scda::kDefaultTopK;
  std::string embedder = "builtin";
  std::string summarizer = "fallback";
  std::string assets = SCDA_DEFAULT_ASSETS_DIR;
  double hmeg_threshold = scda::kDefaultHmegThreshold;
  std::size_t jobs = 1;
  std::string format;
  std::string sep = "[SEP]";
  std::string eos = "[EOS]";
};

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw scda::config_error("cannot write " + path.string());
  return out;
}

void write_json_file(const fs::path& path, const scda::Json& json) {
  auto out = open_output(path);
  out << json.dump(2, ' ', false, scda::Json::error_handler_t::strict) << '\n';
}

scda::CorpusFormat corpus_format(const Options& o, const fs::path& path) {
  if (o.format.empty()) return scda::infer_corpus_format(path);
  const auto format = scda::parse_corpus_format(o.format);
  if (!format) throw scda::config_error("unknown corpus format '" + o.format + "'");
  return *format;
}

// Fails fast with a provider error when a remote embedder is unreachable.
void probe_embedder(const scda::EmbeddingProvider& embedder, const std::string& spec) {
  if (spec == "builtin") return;
  embedder.embed_one("probe");
}

int cmd_augment(const Options& o) {
  scda::PipelineConfig config;
  config.generators = scda::parse_generator_list(o.generators);
  config.top_k = o.top_k;
  config.seed.master_seed = o.seed;
  config.embedder = o.embedder;
  config.summarizer = o.summarizer;
  config.assets = scda::AssetPaths::in_directory(o.assets);
  config.hmeg_threshold = o.hmeg_threshold;
  config.jobs = o.jobs;
  config.validate();

  const auto assets = scda::AssetBundle::load(config.assets);
  const auto embedder = scda::make_embedder(config.embedder);
  const auto summarizer = scda::make_summarizer(config.summarizer);
  probe_embedder(*embedder, config.embedder);

  const fs::path input(o.input);
  scda::CorpusReader reader(input, corpus_format(o, input));
  const fs::path output(o.output);
  auto augmented_out = open_output(output);
  auto skips_out = open_output(scda::skips_path_for(output));
  const auto manifest =
      scda::run_augment(config, assets, *embedder, summarizer.get(),
                        [&reader] { return reader.next(); }, augmented_out, skips_out);
  write_json_file(scda::manifest_path_for(output), manifest.to_json());

  std::size_t augmented = 0;
  std::size_t skipped = 0;
  for (const auto& [id, c] : manifest.counts) {
    augmented += c.augmented;
    skipped += c.skipped;
  }
  std::cerr << "samples=" << manifest.samples << " augmented=" << augmented
            << " skipped=" << skipped << " provider_errors=" << manifest.provider_errors
            << " summarizer_fallbacks=" << manifest.summarizer_fallbacks << '\n';
  return kOk;
}

int cmd_stats(const Options& o) {
  const fs::path originals_path(o.originals);
  const auto originals = scda::load_corpus(originals_path, corpus_format(o, originals_path));
  const auto augmented = scda::read_augmented(o.input);
  const auto embedder = scda::make_embedder(o.embedder);
  probe_embedder(*embedder, o.embedder);
  const auto stats = scda::run_stats(originals, augmented, *embedder);
  if (!o.output.empty()) {
    const fs::path output(o.output);
    write_json_file(output, stats.json);
    auto table = open_output(fs::path(output).replace_extension(".txt"));
    table << stats.table;
  }
  std::cout << stats.table;
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto augmented = scda::read_augmented(o.input);
  std::vector<scda::TextSample> originals;
  if (!o.originals.empty()) {
    const fs::path path(o.originals);
    originals = scda::load_corpus(path, corpus_format(o, path));
  }
  const auto report =
      scda::run_verify(augmented, o.originals.empty() ? nullptr : &originals);
  if (!o.output.empty()) write_json_file(o.output, report.to_json());
  std::cout << "checked=" << report.checked << " passed=" << report.passed
            << " failed=" << report.failed << " unverifiable=" << report.unverifiable
            << " ignored=" << report.ignored << '\n';
  for (const auto& f : report.failures) {
    std::cout << "  " << f.source_id << ": " << f.reason << '\n';
  }
  return report.failures.empty() ? kOk : kDataExit;
}

int cmd_prep(const Options& o) {
  const auto raw = scda::load_raw_pairs(o.input);
  scda::StreamMarkers markers{o.sep, o.eos};
  const auto result = scda::run_prep(raw, markers);
  const fs::path output(o.output);
  auto out = open_output(output);
  out << result.stream;
  const fs::path report =
      o.report.empty() ? fs::path(output).replace_extension(".report.json")
                       : fs::path(o.report);
  write_json_file(report, result.report.to_json());
  std::cerr << "kept=" << result.pairs.size() << '\n';
  return kOk;
}

int exit_code_for(scda::ErrorKind kind) {
  switch (kind) {
    case scda::ErrorKind::kData:
      return kDataExit;
    case scda::ErrorKind::kProvider:
      return kProviderExit;
    case scda::ErrorKind::kConfig:
    case scda::ErrorKind::kInvalidArgument:
      return kConfigExit;
  }
  return kConfigExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subculture-style corpus augmentation"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("--input", o.input, help)->required()->envname("SCDA_INPUT");
  };
  auto format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "corpus format: jsonl|tsv (default: by extension)")
        ->envname("SCDA_FORMAT");
  };

  auto* augment = app.add_subcommand("augment", "generate variants for a corpus");
  input(augment, "corpus file (JSONL or TSV)");
  format(augment);
  augment->add_option("--output", o.output, "augmented JSONL")
      ->required()->envname("SCDA_OUTPUT");
  augment->add_option("--generators", o.generators, "comma-separated generator names")
      ->envname("SCDA_GENERATORS")->capture_default_str();
  augment->add_option("--seed", o.seed, "master seed")->envname("SCDA_SEED")->capture_default_str();
  augment->add_option("--topk", o.top_k, "collocations kept per text")
      ->envname("SCDA_TOPK")->capture_default_str();
  augment->add_option("--embedder", o.embedder, "builtin or http://host:port[/prefix]")
      ->envname("SCDA_EMBEDDER")->capture_default_str();
  augment->add_option("--summarizer", o.summarizer, "fallback or http://host:port[/prefix]")
      ->envname("SCDA_SUMMARIZER")->capture_default_str();
  augment->add_option("--assets", o.assets, "asset directory")
      ->envname("SCDA_ASSETS")->capture_default_str();
  augment->add_option("--hmeg-threshold", o.hmeg_threshold, "minimum pinyin similarity")
      ->envname("SCDA_HMEG_THRESHOLD")->capture_default_str();
  augment->add_option("--jobs", o.jobs, "worker threads")->envname("SCDA_JOBS")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "similarity between originals and variants");
  input(stats, "augmented JSONL");
  format(stats);
  stats->add_option("--originals", o.originals, "original corpus")
      ->required()->envname("SCDA_ORIGINALS");
  stats->add_option("--output", o.output, "JSON report (table goes next to it as .txt)")
      ->envname("SCDA_OUTPUT");
  stats->add_option("--embedder", o.embedder, "builtin or http://host:port[/prefix]")
      ->envname("SCDA_EMBEDDER")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check IREG permutation records");
  input(verify, "augmented JSONL");
  format(verify);
  verify->add_option("--originals", o.originals, "original corpus (optional)")
      ->envname("SCDA_ORIGINALS");
  verify->add_option("--output", o.output, "JSON report")->envname("SCDA_OUTPUT");

  auto* prep = app.add_subcommand("prep", "clean theme/content pairs and build the training stream");
  input(prep, "JSONL of {\"theme\", \"content\"}");
  prep->add_option("--output", o.output, "training stream file")
      ->required()->envname("SCDA_OUTPUT");
  prep->add_option("--report", o.report, "cleaning report (default: <output>.report.json)")
      ->envname("SCDA_REPORT");
  prep->add_option("--sep", o.sep, "separator marker")->envname("SCDA_SEP")->capture_default_str();
  prep->add_option("--eos", o.eos, "end marker")->envname("SCDA_EOS")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigExit;
  }

  try {
    if (augment->parsed()) return cmd_augment(o);
    if (stats->parsed()) return cmd_stats(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_prep(o);
  } catch (const scda::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigExit;
  }
}
