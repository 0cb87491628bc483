#include "radix2/complex_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "radix2/error.hpp"

namespace radix2 {

ComplexField::ComplexField(double epsilon, int sign) : epsilon_(epsilon), sign_(sign) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw_error(ErrorKind::kInvalidArgument, "epsilon must be finite and non-negative");
  }
  if (sign != 1 && sign != -1) throw_error(ErrorKind::kInvalidArgument, "root sign must be +1 or -1");
}

// Textbook product; std::complex's operator* adds Annex G NaN recovery we never need.
ComplexField::Elt ComplexField::mul(const Elt& a, const Elt& b) const noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

bool ComplexField::eq(const Elt& a, const Elt& b) const noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= epsilon_ * scale;
}

ComplexField::Elt ComplexField::root_of_order(unsigned n) const {
  if (n > max_order()) {
    throw_error(ErrorKind::kOrderUnavailable, "complex order 2^" + std::to_string(n) + " too large");
  }
  if (n == 0) return one();
  if (n == 1) return {-1.0, 0.0};
  if (n == 2) return {0.0, static_cast<double>(sign_)};
  const double angle = sign_ * 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{1} << n);
  return std::polar(1.0, angle);
}

}  // namespace radix2
