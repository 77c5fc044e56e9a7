#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmm {

/// Position inside a source document, 1-based.
struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// One diagnostic with a machine-readable code such as `unknown-endpoint`.
struct Diagnostic {
  std::string code;
  std::string message;
  std::optional<SourceLocation> location;

  std::string to_string() const;
};

/// Base error for every failing operation in the library. `code()` is the
/// code of the first diagnostic; `diagnostics()` holds all of them.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message);
  explicit Error(std::vector<Diagnostic> diagnostics);

  const std::string& code() const noexcept { return diagnostics_.front().code; }
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace mmm
