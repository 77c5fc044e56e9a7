#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mmm/error.hpp"
#include "mmm/model.hpp"

namespace mmm {

/// Parses a `.pmodel` document and validates the result.
///
/// Throws Error with code `syntax-error` for a malformed document, `bad-kind`
/// for a kind other than `io`/`control`, or any validate_model code. Every
/// diagnostic carries the line/column of the offending node. The returned
/// model lists dependencies by ascending interface id.
ProcessModel parse_model(std::string_view text);

/// Deterministic `.pmodel` text: activities in model order, dependencies by
/// ascending interface id. parse_model(serialize_model(m)) == m for every
/// valid m whose dependencies are already in id order.
std::string serialize_model(const ProcessModel& model);

/// Reads and parses a file. Throws Error `io-error` when it cannot be read.
ProcessModel load_model_file(const std::filesystem::path& path);

}  // namespace mmm
