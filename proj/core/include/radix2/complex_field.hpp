#pragma once

#include <complex>
#include <cstdint>

namespace radix2 {

/// Complex numbers in double precision with tolerance-based equality.
///
/// eq(a, b) holds when |a - b| <= epsilon * max(1, |a|, |b|). The forward
/// root is e^(sign * 2*pi*i / 2^n); sign defaults to -1, the usual DFT
/// convention. Both signs give primitive roots.
class ComplexField {
 public:
  using Elt = std::complex<double>;
  static constexpr bool kExact = false;
  static constexpr double kDefaultEpsilon = 1e-9;

  explicit ComplexField(double epsilon = kDefaultEpsilon, int sign = -1);

  double epsilon() const noexcept { return epsilon_; }
  int sign() const noexcept { return sign_; }
  unsigned max_order() const noexcept { return 30; }

  Elt zero() const noexcept { return {}; }
  Elt one() const noexcept { return {1.0, 0.0}; }
  Elt from_nat(std::uint64_t n) const noexcept { return {static_cast<double>(n), 0.0}; }
  Elt add(const Elt& a, const Elt& b) const noexcept { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const noexcept { return a - b; }
  Elt neg(const Elt& a) const noexcept { return -a; }
  Elt mul(const Elt& a, const Elt& b) const noexcept;
  Elt inv(const Elt& a) const noexcept { return 1.0 / a; }
  /// Inverse of a root on the unit circle.
  Elt conj(const Elt& a) const noexcept { return std::conj(a); }
  bool eq(const Elt& a, const Elt& b) const noexcept;

  /// Computed directly from the angle rather than by repeated squaring.
  Elt root_of_order(unsigned n) const;

  bool operator==(const ComplexField& other) const noexcept {
    return epsilon_ == other.epsilon_ && sign_ == other.sign_;
  }

 private:
  double epsilon_;
  int sign_;
};

}  // namespace radix2
