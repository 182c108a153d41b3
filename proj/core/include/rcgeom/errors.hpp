#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rc {

enum class ErrorKind {
  InvalidInput,  // malformed or precondition-violating input
  Degenerate,    // mathematically degenerate configuration
  Inconsistent,  // input data admits no solution
  Internal,      // invariant breach; always a bug
};

std::string_view to_string(ErrorKind kind);

/// Typed error raised by every module. `module` names the origin
/// ("exactmath", "surface", ...); `detail` optionally carries a
/// machine-readable payload such as an offending polynomial.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message, std::string detail = {})
      : std::runtime_error(message), kind_(kind), module_(std::move(module)), detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string module_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string module, const std::string& message,
                              std::string detail = {}) {
  throw Error(kind, std::move(module), message, std::move(detail));
}

}  // namespace rc
