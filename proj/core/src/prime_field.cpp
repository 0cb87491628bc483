#include "radix2/prime_field.hpp"

#include <limits>
#include <string>

#include "radix2/algebra.hpp"
#include "radix2/error.hpp"

namespace radix2 {

std::ostream& operator<<(std::ostream& os, Zp x) { return os << x.value; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<detail::u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t small : {2U, 3U, 5U, 7U}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic below 4,759,123,141.
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus == 2 || !is_prime_u32(modulus)) {
    throw_error(ErrorKind::kInvalidArgument,
                "modulus " + std::to_string(modulus) + " is not an odd prime");
  }
  barrett_ = std::numeric_limits<std::uint64_t>::max() / p_;
  for (std::uint32_t t = p_ - 1; (t & 1U) == 0; t >>= 1U) ++two_adicity_;
  for (std::uint32_t g = 2; g < p_; ++g) {
    if (is_generator(*this, Zp{g})) {
      g_ = g;
      return;
    }
  }
}

PrimeField::PrimeField(std::uint32_t modulus, std::uint32_t generator) : PrimeField(modulus) {
  if (generator >= p_ || !is_generator(*this, Zp{generator})) {
    throw_error(ErrorKind::kInvalidArgument, std::to_string(generator) +
                                                 " does not generate the multiplicative group mod " +
                                                 std::to_string(modulus));
  }
  g_ = generator;
}

PrimeField PrimeField::ntt_default() { return PrimeField(kNttModulus, kNttGenerator); }

Zp PrimeField::elt_signed(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Zp{static_cast<std::uint32_t>(r)};
}

Zp PrimeField::inv(Zp a) const noexcept { return pow(*this, a, p_ - 2); }

Zp PrimeField::root_of_order(unsigned n) const {
  if (n > two_adicity_) {
    throw_error(ErrorKind::kOrderUnavailable,
                "2^" + std::to_string(n) + " does not divide " + std::to_string(p_) + " - 1");
  }
  return pow(*this, Zp{g_}, (std::uint64_t{p_} - 1) >> n);
}

bool is_generator(const PrimeField& field, Zp g) {
  if (g.value == 0) return false;
  const std::uint64_t order = field.modulus() - 1;
  for (std::uint64_t q : detail::distinct_prime_factors(order)) {
    if (pow(field, g, order / q) == field.one()) return false;
  }
  return true;
}

}  // namespace radix2
