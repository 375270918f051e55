#pragma once

#include <stdexcept>
#include <string>

namespace cliques {

// Coarse classification of failures; the CLI maps each kind to its own exit code.
enum class ErrorKind {
  invalid_argument,
  unknown_name,
  parse,
  guard,
  admissibility,
  closure,
  basis_mismatch,
  arithmetic,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace cliques
