#pragma once

/**
 * @file algebra.hpp
 * @brief Coefficient-domain contract and primitive-root machinery.
 *
 * A domain is a small value object describing how to do arithmetic on its
 * element type `D::Elt`: PrimeField for exact residues, ComplexField for
 * double-precision approximations. Algorithms take the domain by const
 * reference and the elements by value, so the same code runs over Z_17,
 * Z_998244353 and C.
 *
 * The element type's value-initialized state must be the additive zero;
 * Polynomial relies on this to trim trailing coefficients.
 */

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "radix2/error.hpp"

namespace radix2 {

/// Ring operations plus the natural-number embedding and an equality test.
/// The forward transform needs an integral domain; nothing here can check
/// that, so it is a documented obligation of the instance.
template <class D>
concept CoefficientDomain =
    std::regular<typename D::Elt> &&
    requires(const D& d, const typename D::Elt& a, const typename D::Elt& b,
             std::uint64_t k) {
      { D::kExact } -> std::convertible_to<bool>;
      { d.zero() } -> std::same_as<typename D::Elt>;
      { d.one() } -> std::same_as<typename D::Elt>;
      { d.add(a, b) } -> std::same_as<typename D::Elt>;
      { d.sub(a, b) } -> std::same_as<typename D::Elt>;
      { d.neg(a) } -> std::same_as<typename D::Elt>;
      { d.mul(a, b) } -> std::same_as<typename D::Elt>;
      { d.from_nat(k) } -> std::same_as<typename D::Elt>;
      { d.eq(a, b) } -> std::same_as<bool>;
    };

/// Adds multiplicative inverses; required by the inverse transform.
template <class D>
concept FieldDomain = CoefficientDomain<D> &&
                      requires(const D& d, const typename D::Elt& a) {
                        { d.inv(a) } -> std::same_as<typename D::Elt>;
                      };

/// A domain that can produce a primitive 2^n-th root on demand.
template <class D>
concept RootedDomain = CoefficientDomain<D> && requires(const D& d, unsigned n) {
  { d.root_of_order(n) } -> std::same_as<typename D::Elt>;
  { d.max_order() } -> std::convertible_to<unsigned>;
};

template <class D>
using elt_t = typename D::Elt;

/// Largest supported order exponent. Transform lengths are 2^n coefficients
/// held in memory, so anything near this bound is already unrealistic.
inline constexpr unsigned kMaxOrder = 40;

/// x^k by square-and-multiply; x^0 is one.
template <CoefficientDomain D>
elt_t<D> pow(const D& dom, elt_t<D> x, std::uint64_t k) {
  elt_t<D> acc = dom.one();
  while (k != 0) {
    if (k & 1U) acc = dom.mul(acc, x);
    k >>= 1U;
    if (k != 0) x = dom.mul(x, x);
  }
  return acc;
}

namespace detail {

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// True iff w^n = 1 and no smaller positive power of w is one.
/// Checks w^(n/q) != 1 for every prime q dividing n, which covers every
/// proper divisor. For n = 2^k this is the single test w^(2^(k-1)) != 1.
template <CoefficientDomain D>
bool is_primitive_root(const D& dom, const elt_t<D>& w, std::uint64_t n) {
  if (n == 0) throw_error(ErrorKind::kInvalidArgument, "primitive root order must be >= 1");
  const elt_t<D> one = dom.one();
  if (!dom.eq(pow(dom, w, n), one)) return false;
  for (std::uint64_t q : detail::distinct_prime_factors(n)) {
    if (dom.eq(pow(dom, w, n / q), one)) return false;
  }
  return true;
}

/// Transform order n together with a primitive 2^n-th root of unity.
///
/// Plans built through the public constructor are checked once; the
/// recursion then relies on squaring preserving primitivity instead of
/// re-checking at every level.
template <class E>
class FftPlan {
 public:
  template <CoefficientDomain D>
    requires std::same_as<elt_t<D>, E>
  FftPlan(const D& dom, unsigned order, E root) : order_(order), root_(root), validated_(true) {
    if (order > kMaxOrder) {
      throw_error(ErrorKind::kOrderUnavailable,
                  "order 2^" + std::to_string(order) + " exceeds the supported maximum 2^" +
                      std::to_string(kMaxOrder));
    }
    if (!is_primitive_root(dom, root, std::uint64_t{1} << order)) {
      throw_error(ErrorKind::kInvalidRoot,
                  "w is not a primitive 2^" + std::to_string(order) + "-th root of unity");
    }
  }

  /// Skips the primitivity check. For roots derived from an already
  /// validated plan (w^2, w^-1).
  static FftPlan trusted(unsigned order, E root) { return FftPlan(order, root); }

  unsigned order() const noexcept { return order_; }
  const E& root() const noexcept { return root_; }
  std::size_t length() const noexcept { return std::size_t{1} << order_; }
  bool validated() const noexcept { return validated_; }

 private:
  FftPlan(unsigned order, E root) : order_(order), root_(root), validated_(true) {}

  unsigned order_;
  E root_;
  bool validated_;
};

/// Validated plan of order n using the domain's canonical root.
template <RootedDomain D>
FftPlan<elt_t<D>> primitive_root_of_order(const D& dom, unsigned n) {
  if (n > dom.max_order() || n > kMaxOrder) {
    throw_error(ErrorKind::kOrderUnavailable,
                "domain has no primitive 2^" + std::to_string(n) + "-th root of unity");
  }
  return FftPlan<elt_t<D>>(dom, n, dom.root_of_order(n));
}

/// (n, w) -> (n - 1, w^2). Squaring a primitive 2^n-th root gives a
/// primitive 2^(n-1)-th root, so the result stays validated.
template <CoefficientDomain D>
FftPlan<elt_t<D>> halve_root(const D& dom, const FftPlan<elt_t<D>>& plan) {
  if (plan.order() == 0) throw_error(ErrorKind::kInvalidArgument, "cannot halve a plan of order 0");
  return FftPlan<elt_t<D>>::trusted(plan.order() - 1, dom.mul(plan.root(), plan.root()));
}

/// w^-1 for a primitive 2^n-th root: conjugation when the domain offers it
/// (unit circle), otherwise w^(2^n - 1).
template <CoefficientDomain D>
elt_t<D> root_inverse(const D& dom, const FftPlan<elt_t<D>>& plan) {
  if constexpr (requires { dom.conj(plan.root()); }) {
    return dom.conj(plan.root());
  } else {
    return pow(dom, plan.root(), plan.length() - 1);
  }
}

}  // namespace radix2
