#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radix2 {

enum class ErrorKind {
  kInvalidArgument,     // malformed natural-number argument (b < 2, n = 0, ...)
  kSizeExceedsOrder,    // size p > 2^n
  kInvalidRoot,         // w is not a primitive 2^n-th root of unity
  kNonInvertibleOrder,  // 2 = 0 in the coefficient field
  kOrderUnavailable,    // the domain has no primitive 2^n-th root
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Precondition or argument failure raised by the library. `kind()` lets
/// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string& what);

}  // namespace radix2
