#pragma once

/**
 * @file transform.hpp
 * @brief Recursive radix-2 transforms and their evaluation oracle.
 *
 * All three functions map p to the polynomial whose i-th coefficient is
 * p(w^i), i < 2^n:
 *
 *   naive_dft  evaluates p at each power of w with Horner, O(4^n).
 *   fft        recurses on the even and odd parts with w^2 and rebuilds
 *              coefficient i from ev[i mod 2^(n-1)] + ov[i mod 2^(n-1)] * w^i.
 *   fft1       the same recursion written as butterflies: position j gets
 *              ev[j] + ov[j] * w^j and position j + 2^(n-1) gets
 *              ev[j] - ov[j] * w^j.
 *
 * The public entry points check size p <= 2^n and, through FftPlan, that w
 * is a primitive 2^n-th root. The recursion itself never re-checks.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "radix2/algebra.hpp"
#include "radix2/error.hpp"
#include "radix2/poly.hpp"

namespace radix2 {

namespace detail {

template <class E>
void require_fits(const Polynomial<E>& p, unsigned n) {
  if (n > kMaxOrder || p.size() > (std::size_t{1} << n)) {
    throw_error(ErrorKind::kSizeExceedsOrder, "size p <= 2^n violated: size p = " +
                                                  std::to_string(p.size()) + ", n = " +
                                                  std::to_string(n));
  }
}

/// Unchecked recursive transform. Total: the base case reads p'_0 whatever
/// the size of p.
template <CoefficientDomain D>
Polynomial<elt_t<D>> fft_rec(const D& dom, unsigned n, const elt_t<D>& w,
                             const Polynomial<elt_t<D>>& p) {
  if (n == 0) return Polynomial<elt_t<D>>::constant(p.coeff(0));
  const elt_t<D> w2 = dom.mul(w, w);
  const auto ev = fft_rec(dom, n - 1, w2, even_poly(p));
  const auto ov = fft_rec(dom, n - 1, w2, odd_poly(p));
  const std::size_t mask = (std::size_t{1} << (n - 1)) - 1;
  elt_t<D> wi = dom.one();
  return build(std::size_t{1} << n, [&](std::size_t i) {
    const std::size_t j = i & mask;
    const auto out = dom.add(ev.coeff(j), dom.mul(ov.coeff(j), wi));
    wi = dom.mul(wi, w);
    return out;
  });
}

/// Unchecked butterfly form of fft_rec.
template <CoefficientDomain D>
Polynomial<elt_t<D>> fft1_rec(const D& dom, unsigned n, const elt_t<D>& w,
                              const Polynomial<elt_t<D>>& p) {
  if (n == 0) return Polynomial<elt_t<D>>::constant(p.coeff(0));
  const elt_t<D> w2 = dom.mul(w, w);
  const auto ev = fft1_rec(dom, n - 1, w2, even_poly(p));
  const auto ov = fft1_rec(dom, n - 1, w2, odd_poly(p));
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<elt_t<D>> out(2 * half, dom.zero());
  elt_t<D> wj = dom.one();
  for (std::size_t j = 0; j < half; ++j) {
    const auto t = dom.mul(ov.coeff(j), wj);
    out[j] = dom.add(ev.coeff(j), t);
    out[j + half] = dom.sub(ev.coeff(j), t);
    wj = dom.mul(wj, w);
  }
  return Polynomial<elt_t<D>>(std::move(out));
}

}  // namespace detail

/// Brute-force DFT: coefficient i is p evaluated at w^i. O(4^n); the oracle
/// every fast path is compared against.
template <CoefficientDomain D>
Polynomial<elt_t<D>> naive_dft(const D& dom, const FftPlan<elt_t<D>>& plan,
                               const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, plan.order());
  return build(plan.length(),
               [&](std::size_t i) { return eval(dom, p, pow(dom, plan.root(), i)); });
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> fft(const D& dom, const FftPlan<elt_t<D>>& plan,
                         const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, plan.order());
  return detail::fft_rec(dom, plan.order(), plan.root(), p);
}

/// Validates (n, w) and transforms. Throws kInvalidRoot or kSizeExceedsOrder.
template <CoefficientDomain D>
Polynomial<elt_t<D>> fft(const D& dom, unsigned n, const elt_t<D>& w,
                         const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, n);
  return fft(dom, FftPlan<elt_t<D>>(dom, n, w), p);
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> fft1(const D& dom, const FftPlan<elt_t<D>>& plan,
                          const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, plan.order());
  return detail::fft1_rec(dom, plan.order(), plan.root(), p);
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> fft1(const D& dom, unsigned n, const elt_t<D>& w,
                          const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, n);
  return fft1(dom, FftPlan<elt_t<D>>(dom, n, w), p);
}

}  // namespace radix2
