#pragma once

// The command layer behind the modgraph executable: one JSON request in,
// one JSON document (or DOT text) out.

#include <optional>
#include <string>

#include "modgraph/json_io.hpp"

namespace modgraph {

struct CommandRequest {
  std::string verb;
  Json payload;
  std::optional<std::string> profile;  // P1, P2, P3, point or a JSON file
  std::size_t max_flags = kDefaultMaxFlags;
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 2 schema, 3 domain, 4 size
  std::string output;
};

const std::vector<std::string>& known_verbs();

// Named profile or JSON file path.
VarietyProfile load_profile(const std::string& ref);

CommandResult run(const CommandRequest& req);

// Exit code and error document for a failure.
CommandResult error_result(const Error& e);

}  // namespace modgraph
