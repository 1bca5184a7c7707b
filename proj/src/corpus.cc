#include "scda/corpus.h"

#include <ostream>

#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

std::string line_prefix(std::size_t line_number) {
  return "line " + std::to_string(line_number) + ": ";
}

std::string required_string(const Json& record, const char* field,
                            std::size_t line_number) {
  const auto it = record.find(field);
  if (it == record.end()) {
    throw data_error(line_prefix(line_number) + "missing field \"" + field +
                     "\"");
  }
  if (!it->is_string()) {
    throw data_error(line_prefix(line_number) + "field \"" + field +
                     "\" is not a string");
  }
  return it->get<std::string>();
}

void check_sample(const TextSample& sample, std::size_t line_number) {
  try {
    utf8::decode(sample.text);
    validate(sample);
  } catch (const Error& e) {
    throw data_error(line_prefix(line_number) + e.what());
  }
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

std::optional<CorpusFormat> parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "tsv") return CorpusFormat::kTsv;
  return std::nullopt;
}

CorpusFormat infer_corpus_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".tsv" || ext == ".tab") ? CorpusFormat::kTsv
                                          : CorpusFormat::kJsonl;
}

TextSample parse_jsonl_sample(std::string_view line, std::size_t line_number) {
  Json record;
  try {
    record = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw data_error(line_prefix(line_number) + "invalid JSON: " + e.what());
  }
  if (!record.is_object()) {
    throw data_error(line_prefix(line_number) + "record is not an object");
  }
  TextSample sample{required_string(record, "id", line_number),
                    required_string(record, "text", line_number),
                    required_string(record, "label", line_number)};
  check_sample(sample, line_number);
  return sample;
}

TextSample parse_tsv_sample(std::string_view line, std::size_t line_number) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto first = line.find('\t');
  const auto second = first == std::string_view::npos
                          ? std::string_view::npos
                          : line.find('\t', first + 1);
  if (second == std::string_view::npos) {
    throw data_error(line_prefix(line_number) +
                     "expected id<TAB>label<TAB>text");
  }
  TextSample sample{std::string(line.substr(0, first)),
                    std::string(line.substr(second + 1)),
                    std::string(line.substr(first + 1, second - first - 1))};
  check_sample(sample, line_number);
  return sample;
}

CorpusReader::CorpusReader(const std::filesystem::path& path,
                           CorpusFormat format)
    : in_(path, std::ios::binary), format_(format) {
  if (!in_) throw data_error("cannot open corpus " + path.string());
}

std::optional<TextSample> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (is_blank(line)) continue;
    TextSample sample = format_ == CorpusFormat::kJsonl
                            ? parse_jsonl_sample(line, line_number_)
                            : parse_tsv_sample(line, line_number_);
    if (!seen_ids_.insert(sample.id).second) {
      throw data_error(line_prefix(line_number_) + "duplicate id '" +
                       sample.id + "'");
    }
    return sample;
  }
  return std::nullopt;
}

std::vector<TextSample> load_corpus(const std::filesystem::path& path,
                                    CorpusFormat format) {
  CorpusReader reader(path, format);
  std::vector<TextSample> samples;
  while (auto sample = reader.next()) samples.push_back(std::move(*sample));
  return samples;
}

Json to_json(const AugmentedSample& sample) {
  Json record = Json::object();
  record["source_id"] = sample.source_id;
  record["generator"] = std::string(to_string(sample.generator));
  record["text"] = sample.text;
  record["label"] = sample.label;
  record["meta"] = sample.meta;
  return record;
}

AugmentedSample augmented_from_json(const Json& record) {
  if (!record.is_object()) throw data_error("augmented record is not an object");
  AugmentedSample sample;
  try {
    sample.source_id = record.at("source_id").get<std::string>();
    const auto name = record.at("generator").get<std::string>();
    const auto generator = parse_generator(name);
    if (!generator) throw data_error("unknown generator '" + name + "'");
    sample.generator = *generator;
    sample.text = record.at("text").get<std::string>();
    sample.label = record.at("label").get<std::string>();
    if (record.contains("meta")) sample.meta = record.at("meta");
  } catch (const Json::exception& e) {
    throw data_error(std::string("augmented record: ") + e.what());
  }
  return sample;
}

void write_augmented(std::ostream& out, const AugmentedSample& sample) {
  out << to_json(sample).dump(-1, ' ', false,
                              Json::error_handler_t::strict)
      << '\n';
}

std::vector<AugmentedSample> read_augmented(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open " + path.string());
  std::vector<AugmentedSample> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      out.push_back(augmented_from_json(Json::parse(line)));
    } catch (const Json::parse_error& e) {
      throw data_error(line_prefix(line_number) + "invalid JSON: " + e.what());
    } catch (const Error& e) {
      throw data_error(line_prefix(line_number) + e.what());
    }
  }
  return out;
}

}  // namespace scda
