#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wordlab::cli {

enum class Status { ok, usage_error, domain_error, resource_error };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload;
  // Set when the command prints a document (SVG, DOT, ASCII, help) instead
  // of JSON.
  std::optional<std::string> raw;
  std::string diagnostics;

  int exit_code() const noexcept;
};

/// Runs one command line; `args` excludes the program name.
CommandResult dispatch(std::vector<std::string> const& args);

}  // namespace wordlab::cli
