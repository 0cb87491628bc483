#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace radix2 {

namespace detail {
__extension__ typedef unsigned __int128 u128;
}  // namespace detail

/// Residue modulo the prime of the owning PrimeField, always in [0, p).
struct Zp {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Zp, Zp) = default;
  friend constexpr auto operator<=>(Zp, Zp) = default;
};

std::ostream& operator<<(std::ostream& os, Zp x);

/// Z_p for an odd prime p < 2^32.
///
/// Products of two residues fit in 64 bits and are reduced with a Barrett
/// step, so arithmetic is exact. The multiplicative generator is either
/// supplied and verified, or found by testing g^((p-1)/q) != 1 for every
/// prime factor q of p - 1.
class PrimeField {
 public:
  using Elt = Zp;
  static constexpr bool kExact = true;

  static constexpr std::uint32_t kNttModulus = 998244353;  // 119 * 2^23 + 1
  static constexpr std::uint32_t kNttGenerator = 3;

  /// Throws Error(kInvalidArgument) unless p is an odd prime.
  explicit PrimeField(std::uint32_t modulus);
  /// Same, and additionally rejects a `generator` that does not generate
  /// the multiplicative group.
  PrimeField(std::uint32_t modulus, std::uint32_t generator);

  /// Z_998244353 with generator 3; transforms up to order 2^23.
  static PrimeField ntt_default();

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t generator() const noexcept { return g_; }
  /// Largest k with 2^k | p - 1.
  unsigned max_order() const noexcept { return two_adicity_; }

  Zp elt(std::uint64_t x) const noexcept { return Zp{static_cast<std::uint32_t>(x % p_)}; }
  Zp elt_signed(std::int64_t x) const noexcept;

  Zp zero() const noexcept { return Zp{0}; }
  Zp one() const noexcept { return Zp{1}; }
  Zp from_nat(std::uint64_t n) const noexcept { return elt(n); }

  Zp add(Zp a, Zp b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Zp{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Zp sub(Zp a, Zp b) const noexcept {
    return Zp{a.value >= b.value ? a.value - b.value
                                 : static_cast<std::uint32_t>(std::uint64_t{a.value} + p_ - b.value)};
  }
  Zp neg(Zp a) const noexcept { return Zp{a.value == 0 ? 0 : p_ - a.value}; }
  Zp mul(Zp a, Zp b) const noexcept { return Zp{reduce(std::uint64_t{a.value} * b.value)}; }
  /// Fermat inverse a^(p-2). inv(0) is 0.
  Zp inv(Zp a) const noexcept;
  bool eq(Zp a, Zp b) const noexcept { return a == b; }

  /// g^((p-1)/2^n). Throws Error(kOrderUnavailable) if 2^n does not divide p - 1.
  Zp root_of_order(unsigned n) const;

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t reduce(std::uint64_t x) const noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<detail::u128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;  // < 3p
    r = r >= p_ ? r - p_ : r;
    r = r >= p_ ? r - p_ : r;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t p_;
  std::uint32_t g_ = 0;
  unsigned two_adicity_ = 0;
  std::uint64_t barrett_;  // floor((2^64 - 1) / p)
};

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime_u32(std::uint32_t n) noexcept;

/// Whether g generates the multiplicative group of Z_p.
bool is_generator(const PrimeField& field, Zp g);

}  // namespace radix2
