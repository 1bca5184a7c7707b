#include "scda/summarizer.h"

#include <regex>
#include <set>

#include "scda/error.h"
#include "scda/utf8.h"

namespace scda {
namespace {

bool is_summary_delimiter(char32_t c) {
  return c == U'，' || c == U',' || c == U'。' || c == U'.';
}

void validate_markers(const StreamMarkers& markers) {
  if (markers.sep.empty() || markers.eos.empty()) {
    throw invalid_argument("stream markers must be non-empty");
  }
  if (markers.sep.find(markers.eos) != std::string::npos ||
      markers.eos.find(markers.sep) != std::string::npos) {
    throw invalid_argument("stream markers must not contain one another");
  }
}

}  // namespace

Json CleaningReport::to_json() const {
  Json json = Json::object();
  json["kept"] = kept;
  json["dropped"] = Json::object();
  json["dropped"]["dup"] = duplicates;
  json["dropped"]["short_content"] = short_content;
  json["dropped"]["short_theme"] = short_theme;
  return json;
}

std::string strip_markup(std::string_view text) {
  static const std::regex kTag("<[^<>]*>");
  std::string current(text);
  while (true) {
    std::string next = std::regex_replace(current, kTag, "");
    for (std::size_t pos; (pos = next.find("##")) != std::string::npos;) {
      next.erase(pos, 2);
    }
    if (next == current) return next;
    current = std::move(next);
  }
}

std::vector<ThemeContentPair> clean_corpus(const std::vector<ThemeContentPair>& raw,
                                           CleaningReport* report,
                                           const CleaningOptions& options) {
  CleaningReport local;
  std::vector<ThemeContentPair> kept;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& pair : raw) {
    ThemeContentPair cleaned{utf8::trim(strip_markup(pair.theme)),
                             utf8::trim(strip_markup(pair.content))};
    if (utf8::length(cleaned.content) < options.min_content_length) {
      ++local.short_content;
      continue;
    }
    if (utf8::length(cleaned.theme) < options.min_theme_length) {
      ++local.short_theme;
      continue;
    }
    if (!seen.emplace(cleaned.theme, cleaned.content).second) {
      ++local.duplicates;
      continue;
    }
    kept.push_back(std::move(cleaned));
  }
  local.kept = kept.size();
  if (report) *report = local;
  return kept;
}

std::string format_training(const std::vector<ThemeContentPair>& pairs,
                            const StreamMarkers& markers) {
  validate_markers(markers);
  if (pairs.empty()) throw invalid_argument("format_training: no pairs");
  std::string stream;
  for (const auto& pair : pairs) {
    for (const std::string* field : {&pair.theme, &pair.content}) {
      if (field->find(markers.sep) != std::string::npos ||
          field->find(markers.eos) != std::string::npos) {
        throw invalid_argument("format_training: field contains a marker: '" +
                               *field + "'");
      }
    }
    stream += pair.content;
    stream += markers.sep;
    stream += pair.theme;
    stream += markers.eos;
  }
  // A field ending in a marker prefix could still fuse with the next marker.
  if (parse_training(stream, markers) != pairs) {
    throw invalid_argument("format_training: fields form an ambiguous stream");
  }
  return stream;
}

std::vector<ThemeContentPair> parse_training(std::string_view stream,
                                             const StreamMarkers& markers) {
  validate_markers(markers);
  std::vector<ThemeContentPair> pairs;
  std::size_t pos = 0;
  while (pos < stream.size()) {
    const auto sep = stream.find(markers.sep, pos);
    if (sep == std::string_view::npos) {
      throw data_error("training stream: missing separator after offset " +
                       std::to_string(pos));
    }
    const auto eos = stream.find(markers.eos, sep + markers.sep.size());
    if (eos == std::string_view::npos) {
      throw data_error("training stream: missing end marker after offset " +
                       std::to_string(sep));
    }
    ThemeContentPair pair{
        std::string(stream.substr(sep + markers.sep.size(),
                                  eos - sep - markers.sep.size())),
        std::string(stream.substr(pos, sep - pos))};
    if (pair.content.find(markers.eos) != std::string::npos ||
        pair.theme.find(markers.sep) != std::string::npos) {
      throw data_error("training stream: markers out of order");
    }
    pairs.push_back(std::move(pair));
    pos = eos + markers.eos.size();
  }
  return pairs;
}

std::string summarize(std::string_view text, const SummarizerClient& client,
                      std::size_t max_len) {
  if (text.empty()) throw invalid_argument("summarize: empty text");
  std::string theme;
  try {
    theme = client.summarize(text, max_len);
  } catch (const ProviderError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProviderError(client.identity(), e.what());
  }
  if (utf8::trim(theme).empty()) {
    throw ProviderError(client.identity(), "empty theme");
  }
  const std::size_t length = utf8::length(theme);
  if (length > max_len) {
    throw ProviderError(client.identity(),
                        "theme has " + std::to_string(length) +
                            " characters, limit is " + std::to_string(max_len));
  }
  return theme;
}

std::string fallback_summarize(std::string_view text,
                               const EmbeddingProvider& embedder,
                               std::size_t max_len) {
  if (text.empty()) throw invalid_argument("fallback_summarize: empty text");
  const std::u32string s = utf8::decode(text);
  std::vector<std::string> clauses;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && !is_summary_delimiter(s[i])) continue;
    std::string clause = utf8::trim(utf8::encode(std::u32string_view(s).substr(begin, i - begin)));
    if (!clause.empty()) clauses.push_back(std::move(clause));
    begin = i + 1;
  }
  if (clauses.empty()) return utf8::truncate(utf8::trim(text), max_len);
  if (clauses.size() == 1) return utf8::truncate(clauses.front(), max_len);

  std::vector<std::string> batch;
  batch.emplace_back(text);
  batch.insert(batch.end(), clauses.begin(), clauses.end());
  const auto vectors = embedder.embed(batch);
  if (vectors.size() != batch.size()) {
    throw ProviderError(embedder.identity(), "wrong number of vectors");
  }
  std::size_t best = 0;
  double best_score = -2.0;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& v = vectors[i + 1];
    if (v.is_zero() || vectors.front().is_zero()) continue;
    const double score = cosine(v, vectors.front());
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return utf8::truncate(clauses[best], max_len);
}

AugmentedSample mdeeg_augment(const TextSample& sample,
                              const SummarizerClient* client,
                              const FallbackSummarizer& fallback,
                              std::size_t max_len) {
  Json meta = Json::object();
  if (client) {
    try {
      std::string theme = summarize(sample.text, *client, max_len);
      meta["client"] = client->identity();
      return make_augmented(sample, GeneratorId::kMdeeg, std::move(theme),
                            std::move(meta));
    } catch (const Error& e) {
      meta["fallback_reason"] = e.what();
    }
  }
  std::string theme = summarize(sample.text, fallback, max_len);
  meta["client"] = fallback.identity();
  return make_augmented(sample, GeneratorId::kMdeeg, std::move(theme),
                        std::move(meta));
}

}  // namespace scda
