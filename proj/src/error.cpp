#include "mmm/error.hpp"

#include <utility>

namespace mmm {

std::string Diagnostic::to_string() const {
  std::string out;
  if (location) {
    out += std::to_string(location->line) + ":" + std::to_string(location->column) + ": ";
  }
  out += code + ": " + message;
  return out;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += '\n';
    out += d.to_string();
  }
  return out;
}

}  // namespace

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(code + ": " + message),
      diagnostics_{Diagnostic{std::move(code), message, std::nullopt}} {}

Error::Error(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) diagnostics_.push_back({"error", "unknown error", std::nullopt});
}

}  // namespace mmm
