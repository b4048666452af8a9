#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "levifol/spec_parser.hpp"

namespace levifol {

using Json = nlohmann::ordered_json;

/// Commands understood by run(), in the order the CLI lists them.
const std::vector<std::string>& report_commands();

struct RunOptions {
  std::optional<int> max_degree;
  std::optional<int> order;
  /// Text of a connection file for `verify`.
  std::optional<std::string> connection;
  bool timing = true;
};

struct RunOutcome {
  Json report;
  /// 0 success, 2 rejected input, 3 failed internal check.
  int exit_code = 0;
};

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string input_hash(const std::string& text);

/// Parses `source` and runs `command` on it. Every failure is turned into a report with a
/// status and an exit code; nothing escapes except std::bad_alloc.
RunOutcome run(const std::string& command, const std::string& source, const RunOptions& options);

/// Reads a connection from the JSON printed by `linearize` (or its `connection` member alone).
struct ConnectionFile {
  std::vector<PolyVectorField> images;
  PolyVectorField euler;
  std::optional<int> order;
};
ConnectionFile parse_connection(const std::string& text, const std::vector<std::string>& vars);

}  // namespace levifol
