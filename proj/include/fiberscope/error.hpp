#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fiberscope {

/// Exception carrying a stable machine-readable code alongside the message.
/// The CLI maps codes onto exit statuses; library callers can switch on them.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed textual input (words, polynomials, config files).
struct SyntaxError : Error {
  explicit SyntaxError(const std::string& message, std::string code = "syntax_error")
      : Error(std::move(code), message) {}
};

/// Structurally well-formed input outside an operation's domain.
struct DomainError : Error {
  DomainError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

/// Missing or malformed bundled data file.
struct DataFileError : Error {
  explicit DataFileError(const std::string& message)
      : Error("data_file_error", message) {}
};

/// Exit-status category for a given error code. Documented in the README.
inline int exit_status_for(const std::string& code) {
  if (code == "syntax_error" || code == "zero_exponent" || code == "unknown_variable" ||
      code == "bad_config") {
    return 2;
  }
  if (code == "data_file_error") return 4;
  if (code == "io_error") return 5;
  return 3;  // domain errors
}

}  // namespace fiberscope
