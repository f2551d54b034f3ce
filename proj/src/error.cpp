#include "modgraph/error.hpp"

#include <algorithm>

namespace modgraph {

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<Violation> violations)
    : std::runtime_error(message),
      kind_(kind),
      violations_(std::move(violations)) {}

void throw_domain(const std::string& id, const std::string& message) {
  throw Error(ErrorKind::domain, id + ": " + message, {{id, message}});
}

void throw_violations(const std::string& what,
                      std::vector<Violation> violations) {
  std::string message = what;
  for (const auto& v : violations) message += "; " + v.id + ": " + v.message;
  throw Error(ErrorKind::domain, message, std::move(violations));
}

void require_valid(const std::string& what,
                   const std::vector<Violation>& violations) {
  if (!violations.empty()) throw_violations(what, violations);
}

bool has_violation(const std::vector<Violation>& violations,
                   const std::string& id) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.id == id; });
}

}  // namespace modgraph
