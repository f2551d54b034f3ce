#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modgraph {

// Category of a failure; the CLI maps these onto exit codes.
enum class ErrorKind {
  schema,  // malformed input document
  domain,  // well-formed input violating a definition
  size,    // configured size cap exceeded
};

// A violated condition. `id` names the definition clause, e.g. "doc-5" or
// "j-involution".
struct Violation {
  std::string id;
  std::string message;

  bool operator==(const Violation&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<Violation> violations = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  ErrorKind kind_;
  std::vector<Violation> violations_;
};

[[noreturn]] void throw_domain(const std::string& id,
                               const std::string& message);
[[noreturn]] void throw_violations(const std::string& what,
                                   std::vector<Violation> violations);

// Throws a domain error if `violations` is non-empty.
void require_valid(const std::string& what,
                   const std::vector<Violation>& violations);

bool has_violation(const std::vector<Violation>& violations,
                   const std::string& id);

}  // namespace modgraph
