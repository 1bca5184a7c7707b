#pragma once

#include <chrono>
#include <iosfwd>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "scda/embedding.h"
#include "scda/summarizer.h"
#include "scda/types.h"

// Wire protocols for out-of-process providers.
//
// Embedding:   request {"texts": [str, ...]}
//              response {"dim": int, "vectors": [[float, ...], ...]}
// Summarizer:  request {"text": str, "max_len": int}
//              response {"theme": str}
//
// Both travel either as the body of an HTTP POST (/embed, /summarize) or as
// one JSON document per line over a byte stream.
namespace scda::remote {

Json make_embed_request(std::span<const std::string> texts);
// Throws ProviderError(provider, ...) on any schema violation.
std::vector<EmbeddingVector> parse_embed_response(std::string_view body,
                                                  std::size_t expected_count,
                                                  const std::string& provider);

Json make_summarize_request(std::string_view text, std::size_t max_len);
std::string parse_summarize_response(std::string_view body,
                                     std::size_t max_len,
                                     const std::string& provider);

// "http://host:port/prefix" split into the origin and a path prefix.
struct Endpoint {
  std::string origin;
  std::string path_prefix;
};
Endpoint parse_endpoint(std::string_view url);

struct HttpOptions {
  std::chrono::milliseconds timeout{10000};
};

class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(std::string url, HttpOptions options = {});

  std::string identity() const override { return url_; }
  std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) const override;

 private:
  std::string url_;
  Endpoint endpoint_;
  HttpOptions options_;
};

class HttpSummarizer : public SummarizerClient {
 public:
  explicit HttpSummarizer(std::string url, HttpOptions options = {});

  std::string identity() const override { return url_; }
  std::string summarize(std::string_view text,
                        std::size_t max_len) const override;

 private:
  std::string url_;
  Endpoint endpoint_;
  HttpOptions options_;
};

// Line-delimited JSON over a pair of streams (e.g. a child process' pipes).
// Calls are serialized.
class StreamEmbeddingProvider : public EmbeddingProvider {
 public:
  StreamEmbeddingProvider(std::istream& in, std::ostream& out,
                          std::string name);

  std::string identity() const override { return name_; }
  std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) const override;

 private:
  std::istream& in_;
  std::ostream& out_;
  std::string name_;
  mutable std::mutex mutex_;
};

class StreamSummarizer : public SummarizerClient {
 public:
  StreamSummarizer(std::istream& in, std::ostream& out, std::string name);

  std::string identity() const override { return name_; }
  std::string summarize(std::string_view text,
                        std::size_t max_len) const override;

 private:
  std::istream& in_;
  std::ostream& out_;
  std::string name_;
  mutable std::mutex mutex_;
};

}  // namespace scda::remote
