#pragma once

#include <stdexcept>
#include <string>

namespace scda {

// Coarse failure category. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kConfig,           // bad configuration or unreadable asset
  kData,             // malformed input record or corpus
  kProvider,         // embedding / segmentation / summarizer provider failed
  kInvalidArgument,  // violated precondition of a library call
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an external capability fails. Carries the provider identity so
// callers can report which backend misbehaved.
class ProviderError : public Error {
 public:
  ProviderError(std::string provider, const std::string& message)
      : Error(ErrorKind::kProvider, provider + ": " + message),
        provider_(std::move(provider)) {}

  const std::string& provider() const { return provider_; }

 private:
  std::string provider_;
};

inline Error config_error(const std::string& message) {
  return Error(ErrorKind::kConfig, message);
}
inline Error data_error(const std::string& message) {
  return Error(ErrorKind::kData, message);
}
inline Error invalid_argument(const std::string& message) {
  return Error(ErrorKind::kInvalidArgument, message);
}

}  // namespace scda
