#include "radix2/error.hpp"

namespace radix2 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kSizeExceedsOrder:
      return "SizeExceedsOrder";
    case ErrorKind::kInvalidRoot:
      return "InvalidRoot";
    case ErrorKind::kNonInvertibleOrder:
      return "NonInvertibleOrder";
    case ErrorKind::kOrderUnavailable:
      return "OrderUnavailable";
  }
  return "Unknown";
}

void throw_error(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace radix2
