#include "radix2/iterative.hpp"

#include <string>

namespace radix2 {

std::uint64_t digitn(std::uint64_t b, std::uint64_t value, std::uint64_t m) {
  if (b < 2) throw_error(ErrorKind::kInvalidArgument, "digitn requires base >= 2");
  // Divide step by step: b^m may overflow, and once value hits 0 every
  // further digit is 0.
  for (std::uint64_t k = 0; k < m && value != 0; ++k) value /= b;
  return value % b;
}

std::uint64_t rdigitn(std::uint64_t b, std::uint64_t n, std::uint64_t value) {
  if (b < 2) throw_error(ErrorKind::kInvalidArgument, "rdigitn requires base >= 2");
  std::uint64_t rest = value;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    out = out * b + rest % b;
    rest /= b;
  }
  if (rest != 0) {
    throw_error(ErrorKind::kInvalidArgument, std::to_string(value) + " has more than " +
                                                 std::to_string(n) + " digits in base " +
                                                 std::to_string(b));
  }
  return out;
}

std::vector<std::size_t> bit_reversal_table(unsigned n) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<std::size_t> rev(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    rev[i] = (rev[i >> 1U] >> 1U) | ((i & 1U) << (n - 1));
  }
  return rev;
}

}  // namespace radix2
