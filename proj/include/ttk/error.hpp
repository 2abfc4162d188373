#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttk {

enum class ErrorKind {
  invalid_argument,
  unsupported_range,
  budget,
  not_a_knot,
  out_of_scope,
  overflow,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::unsupported_range: return "unsupported range";
    case ErrorKind::budget: return "budget";
    case ErrorKind::not_a_knot: return "not a knot";
    case ErrorKind::out_of_scope: return "out of scope";
    case ErrorKind::overflow: return "overflow";
  }
  return "error";
}

// Domain error carrying a machine-checkable kind; what() is "<kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

inline void require(bool cond, ErrorKind kind, const std::string& detail) {
  if (!cond) fail(kind, detail);
}

}  // namespace ttk
