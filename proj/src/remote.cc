#include "scda/remote.h"

#include <cmath>
#include <istream>
#include <ostream>

#include "httplib.h"
#include "scda/error.h"
#include "scda/utf8.h"

namespace scda::remote {
namespace {

Json parse_body(std::string_view body, const std::string& provider) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ProviderError(provider, std::string("malformed response: ") + e.what());
  }
}

std::string post(const Endpoint& endpoint, const std::string& path,
                 const std::string& body, const HttpOptions& options,
                 const std::string& provider) {
  httplib::Client client(endpoint.origin);
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      options.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  auto result =
      client.Post(endpoint.path_prefix + path, body, "application/json");
  if (!result) {
    throw ProviderError(provider,
                        "request failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw ProviderError(provider,
                        "HTTP status " + std::to_string(result->status));
  }
  return result->body;
}

std::string exchange_line(std::istream& in, std::ostream& out,
                          const std::string& request,
                          const std::string& provider) {
  out << request << '\n';
  out.flush();
  if (!out) throw ProviderError(provider, "write to stream failed");
  std::string line;
  if (!std::getline(in, line)) {
    throw ProviderError(provider, "stream closed before a response arrived");
  }
  return line;
}

std::string dump(const Json& json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::strict);
}

}  // namespace

Json make_embed_request(std::span<const std::string> texts) {
  Json request = Json::object();
  request["texts"] = Json::array();
  for (const auto& text : texts) request["texts"].push_back(text);
  return request;
}

std::vector<EmbeddingVector> parse_embed_response(std::string_view body,
                                                  std::size_t expected_count,
                                                  const std::string& provider) {
  const Json response = parse_body(body, provider);
  if (!response.is_object()) {
    throw ProviderError(provider, "response is not an object");
  }
  const auto dim_it = response.find("dim");
  const auto vec_it = response.find("vectors");
  if (dim_it == response.end() || !dim_it->is_number_integer() ||
      dim_it->get<long long>() <= 0) {
    throw ProviderError(provider, "response lacks a positive integer \"dim\"");
  }
  if (vec_it == response.end() || !vec_it->is_array()) {
    throw ProviderError(provider, "response lacks a \"vectors\" array");
  }
  const auto dim = static_cast<std::size_t>(dim_it->get<long long>());
  if (vec_it->size() != expected_count) {
    throw ProviderError(provider, "expected " + std::to_string(expected_count) +
                                      " vectors, got " +
                                      std::to_string(vec_it->size()));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(expected_count);
  for (const auto& row : *vec_it) {
    if (!row.is_array() || row.size() != dim) {
      throw ProviderError(provider, "vector does not have dimension " +
                                        std::to_string(dim));
    }
    EmbeddingVector v;
    v.components.reserve(dim);
    for (const auto& x : row) {
      if (!x.is_number()) throw ProviderError(provider, "non-numeric component");
      const double value = x.get<double>();
      if (!std::isfinite(value)) {
        throw ProviderError(provider, "non-finite component");
      }
      v.components.push_back(value);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json make_summarize_request(std::string_view text, std::size_t max_len) {
  Json request = Json::object();
  request["text"] = std::string(text);
  request["max_len"] = max_len;
  return request;
}

std::string parse_summarize_response(std::string_view body,
                                     std::size_t max_len,
                                     const std::string& provider) {
  const Json response = parse_body(body, provider);
  if (!response.is_object() || !response.contains("theme") ||
      !response["theme"].is_string()) {
    throw ProviderError(provider, "response lacks a string \"theme\"");
  }
  std::string theme = response["theme"].get<std::string>();
  try {
    utf8::decode(theme);
  } catch (const Error&) {
    throw ProviderError(provider, "theme is not valid UTF-8");
  }
  const std::size_t length = utf8::length(theme);
  if (length > max_len) {
    throw ProviderError(provider, "theme has " + std::to_string(length) +
                                      " characters, limit is " +
                                      std::to_string(max_len));
  }
  return theme;
}

Endpoint parse_endpoint(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || url.substr(0, scheme_end) != "http") {
    throw config_error("endpoint must be an http:// URL: " + std::string(url));
  }
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint endpoint;
  if (path_start == std::string_view::npos) {
    endpoint.origin = std::string(url);
  } else {
    endpoint.origin = std::string(url.substr(0, path_start));
    endpoint.path_prefix = std::string(url.substr(path_start));
    while (!endpoint.path_prefix.empty() && endpoint.path_prefix.back() == '/') {
      endpoint.path_prefix.pop_back();
    }
  }
  if (endpoint.origin.size() <= scheme_end + 3) {
    throw config_error("endpoint has no host: " + std::string(url));
  }
  return endpoint;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string url,
                                             HttpOptions options)
    : url_(std::move(url)), endpoint_(parse_endpoint(url_)), options_(options) {}

std::vector<EmbeddingVector> HttpEmbeddingProvider::embed(
    std::span<const std::string> texts) const {
  if (texts.empty()) return {};
  const std::string body = post(endpoint_, "/embed",
                                dump(make_embed_request(texts)), options_, url_);
  return parse_embed_response(body, texts.size(), url_);
}

HttpSummarizer::HttpSummarizer(std::string url, HttpOptions options)
    : url_(std::move(url)), endpoint_(parse_endpoint(url_)), options_(options) {}

std::string HttpSummarizer::summarize(std::string_view text,
                                      std::size_t max_len) const {
  const std::string body =
      post(endpoint_, "/summarize", dump(make_summarize_request(text, max_len)),
           options_, url_);
  return parse_summarize_response(body, max_len, url_);
}

StreamEmbeddingProvider::StreamEmbeddingProvider(std::istream& in,
                                                 std::ostream& out,
                                                 std::string name)
    : in_(in), out_(out), name_(std::move(name)) {}

std::vector<EmbeddingVector> StreamEmbeddingProvider::embed(
    std::span<const std::string> texts) const {
  if (texts.empty()) return {};
  std::lock_guard lock(mutex_);
  const std::string line =
      exchange_line(in_, out_, dump(make_embed_request(texts)), name_);
  return parse_embed_response(line, texts.size(), name_);
}

StreamSummarizer::StreamSummarizer(std::istream& in, std::ostream& out,
                                   std::string name)
    : in_(in), out_(out), name_(std::move(name)) {}

std::string StreamSummarizer::summarize(std::string_view text,
                                        std::size_t max_len) const {
  std::lock_guard lock(mutex_);
  const std::string line = exchange_line(
      in_, out_, dump(make_summarize_request(text, max_len)), name_);
  return parse_summarize_response(line, max_len, name_);
}

}  // namespace scda::remote
