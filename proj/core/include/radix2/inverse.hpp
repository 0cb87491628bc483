#pragma once

/**
 * @file inverse.hpp
 * @brief Inverse transform and transform-based polynomial multiplication.
 *
 * ifft n w p = (2^n)^-1 * fft n w^-1 p. Over a field where 2 != 0 it undoes
 * fft n w for every p with size p <= 2^n.
 *
 * fft_mul evaluates both factors at the 2^n powers of a primitive root
 * (2^n >= size p + size q - 1), multiplies the values pointwise and
 * interpolates back with ifft.
 */

#include <cstddef>
#include <string>
#include <string_view>

#include "radix2/algebra.hpp"
#include "radix2/error.hpp"
#include "radix2/iterative.hpp"
#include "radix2/poly.hpp"
#include "radix2/transform.hpp"

namespace radix2 {

/// Which forward algorithm runs inside ifft and fft_mul.
enum class Engine { kRecursive, kButterfly, kIterative };

std::string_view to_string(Engine engine) noexcept;

template <CoefficientDomain D>
Polynomial<elt_t<D>> forward(const D& dom, Engine engine, const FftPlan<elt_t<D>>& plan,
                             const Polynomial<elt_t<D>>& p) {
  switch (engine) {
    case Engine::kRecursive:
      return fft(dom, plan, p);
    case Engine::kButterfly:
      return fft1(dom, plan, p);
    case Engine::kIterative:
      break;
  }
  return istep(dom, plan, p);
}

/// build(len, i -> a'_i * b'_i)
template <CoefficientDomain D>
Polynomial<elt_t<D>> pointwise_mul(const D& dom, const Polynomial<elt_t<D>>& a,
                                   const Polynomial<elt_t<D>>& b, std::size_t len) {
  return build(len, [&](std::size_t i) { return dom.mul(a.coeff(i), b.coeff(i)); });
}

template <FieldDomain D>
Polynomial<elt_t<D>> ifft(const D& dom, const FftPlan<elt_t<D>>& plan,
                          const Polynomial<elt_t<D>>& p, Engine engine = Engine::kIterative) {
  const elt_t<D> two = dom.from_nat(2);
  if (dom.eq(two, dom.zero())) {
    throw_error(ErrorKind::kNonInvertibleOrder, "2 is not invertible in the coefficient field");
  }
  detail::require_fits(p, plan.order());
  const auto inverse_plan = FftPlan<elt_t<D>>::trusted(plan.order(), root_inverse(dom, plan));
  const elt_t<D> scale_by = dom.inv(dom.from_nat(plan.length()));
  return scale(dom, scale_by, forward(dom, engine, inverse_plan, p));
}

template <FieldDomain D>
Polynomial<elt_t<D>> ifft(const D& dom, unsigned n, const elt_t<D>& w,
                          const Polynomial<elt_t<D>>& p, Engine engine = Engine::kIterative) {
  if (dom.eq(dom.from_nat(2), dom.zero())) {
    throw_error(ErrorKind::kNonInvertibleOrder, "2 is not invertible in the coefficient field");
  }
  detail::require_fits(p, n);
  return ifft(dom, FftPlan<elt_t<D>>(dom, n, w), p, engine);
}

/// Smallest n with 2^n >= len.
constexpr unsigned order_for_length(std::size_t len) noexcept {
  unsigned n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  return n;
}

/// Product through a caller-supplied plan, which must satisfy
/// plan.length() >= size p + size q - 1. Lets callers keep root finding
/// out of timed regions.
template <FieldDomain D>
Polynomial<elt_t<D>> fft_mul_with_plan(const D& dom, const FftPlan<elt_t<D>>& plan,
                                       const Polynomial<elt_t<D>>& p,
                                       const Polynomial<elt_t<D>>& q,
                                       Engine engine = Engine::kIterative) {
  if (p.is_zero() || q.is_zero()) return {};
  if (plan.length() < p.size() + q.size() - 1) {
    throw_error(ErrorKind::kSizeExceedsOrder,
                "plan of length " + std::to_string(plan.length()) + " cannot hold a product of size " +
                    std::to_string(p.size() + q.size() - 1));
  }
  const auto fp = forward(dom, engine, plan, p);
  const auto fq = forward(dom, engine, plan, q);
  return ifft(dom, plan, pointwise_mul(dom, fp, fq, plan.length()), engine);
}

/// p * q through the smallest transform that holds the product. Zero
/// factors short-circuit before any plan is built.
template <class D>
  requires FieldDomain<D> && RootedDomain<D>
Polynomial<elt_t<D>> fft_mul(const D& dom, const Polynomial<elt_t<D>>& p,
                             const Polynomial<elt_t<D>>& q, Engine engine = Engine::kIterative) {
  if (p.is_zero() || q.is_zero()) return {};
  const unsigned n = order_for_length(p.size() + q.size() - 1);
  return fft_mul_with_plan(dom, primitive_root_of_order(dom, n), p, q, engine);
}

}  // namespace radix2
