#pragma once

/**
 * @file iterative.hpp
 * @brief Bottom-up (bit-reversal) form of the radix-2 transform.
 *
 * The recursion tree of fft1 of order N has 2^d sub-results at depth d,
 * each of length 2^(N-d). The iterative algorithm keeps all sub-results
 * of one depth side by side in a single polynomial (a StageSnapshot),
 * starting from the bit-reversed input at depth N and applying one
 * butterfly stage per level until depth 0 holds fft1 of the whole input.
 *
 * step and step1 both merge 2^(m+1) blocks of length 2^n into 2^m blocks
 * of length 2^(n+1). step is written as a sum of scaled monomials over
 * blocks and is the reference. step1 is a single indexed pass over a flat
 * buffer and is what istep runs.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "radix2/algebra.hpp"
#include "radix2/error.hpp"
#include "radix2/poly.hpp"
#include "radix2/transform.hpp"

namespace radix2 {

/// The m-th digit of `value` in base b. Throws kInvalidArgument if b < 2.
std::uint64_t digitn(std::uint64_t b, std::uint64_t value, std::uint64_t m);

/// `value` with its n base-b digits reversed. Requires b >= 2 and
/// value < b^n; throws kInvalidArgument otherwise.
std::uint64_t rdigitn(std::uint64_t b, std::uint64_t n, std::uint64_t value);

/// Bit-reversal permutation table of length 2^n: table[i] = rdigitn(2, n, i).
std::vector<std::size_t> bit_reversal_table(unsigned n);

/// All sub-results at one level of the bottom-up pipeline.
/// `data` holds 2^depth blocks of length 2^width; `root` is the root of
/// unity whose fft1 the blocks are (w^(2^depth) for an order-(depth+width)
/// transform with root w).
template <class E>
struct StageSnapshot {
  unsigned depth = 0;
  unsigned width = 0;
  E root{};
  Polynomial<E> data;
};

/// reverse_poly n p: coefficient i is p'_(rdigitn 2 n i), i < 2^n.
template <class E>
Polynomial<E> reverse_poly(unsigned n, const Polynomial<E>& p) {
  return build(std::size_t{1} << n, [&](std::size_t i) { return p.coeff(rdigitn(2, n, i)); });
}

namespace detail {

inline void require_step_fits(std::size_t size, unsigned m, unsigned n) {
  if (m + n + 1 > kMaxOrder || size > (std::size_t{1} << (m + n + 1))) {
    throw_error(ErrorKind::kSizeExceedsOrder,
                "size p <= 2^(m + n + 1) violated: size p = " + std::to_string(size) +
                    ", m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
}

/// One butterfly stage in place over `a`, whose length is a multiple of
/// 2^(n+1). Within each block, position j < 2^n becomes a[j] + a[j+2^n] w^j
/// and position j + 2^n becomes a[j] - a[j+2^n] w^j. Twiddles are
/// accumulated once and shared by every block.
template <CoefficientDomain D>
void butterfly_stage(const D& dom, std::span<elt_t<D>> a, unsigned n, const elt_t<D>& w,
                     std::vector<elt_t<D>>& twiddles) {
  const std::size_t half = std::size_t{1} << n;
  twiddles.resize(half);
  elt_t<D> t = dom.one();
  for (std::size_t j = 0; j < half; ++j) {
    twiddles[j] = t;
    t = dom.mul(t, w);
  }
  for (std::size_t base = 0; base < a.size(); base += 2 * half) {
    for (std::size_t j = 0; j < half; ++j) {
      const auto e = a[base + j];
      const auto o = dom.mul(a[base + j + half], twiddles[j]);
      a[base + j] = dom.add(e, o);
      a[base + j + half] = dom.sub(e, o);
    }
  }
}

}  // namespace detail

/// Reference stage: the sum over blocks l < 2^m and j < 2^n of
///   (ev'_j + ov'_j w^j) X^(j + l 2^(n+1)) + (ev'_j - ov'_j w^j) X^(j + l 2^(n+1) + 2^n)
/// where ev and ov are the two halves of block l. Twiddles are taken as
/// pow(w, j) directly.
template <CoefficientDomain D>
Polynomial<elt_t<D>> step(const D& dom, unsigned m, unsigned n, const elt_t<D>& w,
                          const Polynomial<elt_t<D>>& p) {
  using E = elt_t<D>;
  detail::require_step_fits(p.size(), m, n);
  const std::size_t half = std::size_t{1} << n;
  const std::size_t block = 2 * half;
  std::vector<E> acc(block << m, dom.zero());
  for (std::size_t l = 0; l < (std::size_t{1} << m); ++l) {
    const std::size_t base = l * block;
    const auto ev = build(half, [&](std::size_t i) { return p.coeff(i + base); });
    const auto ov = build(half, [&](std::size_t i) { return p.coeff(i + base + half); });
    for (std::size_t j = 0; j < half; ++j) {
      const E t = dom.mul(ov.coeff(j), pow(dom, w, j));
      acc[j + base] = dom.add(acc[j + base], dom.add(ev.coeff(j), t));
      acc[j + base + half] = dom.add(acc[j + base + half], dom.sub(ev.coeff(j), t));
    }
  }
  return Polynomial<E>(std::move(acc));
}

/// Direct indexed stage over positions i < 2^(m+n+1), with j = i mod 2^(n+1):
///   j <  2^n:  p'_i + p'_(i+2^n) w^j
///   j >= 2^n:  p'_(i-2^n) - p'_i w^(j-2^n)
template <CoefficientDomain D>
Polynomial<elt_t<D>> step1(const D& dom, unsigned m, unsigned n, const elt_t<D>& w,
                           const Polynomial<elt_t<D>>& p) {
  detail::require_step_fits(p.size(), m, n);
  auto buf = p.to_vector(std::size_t{1} << (m + n + 1));
  std::vector<elt_t<D>> twiddles;
  detail::butterfly_stage(dom, std::span<elt_t<D>>(buf), n, w, twiddles);
  return Polynomial<elt_t<D>>(std::move(buf));
}

/// Bit-reverse, then run the stages from depth n down to depth 0. Stage
/// k (block width 2^k -> 2^(k+1)) uses root w^(2^(n-1-k)). Equals fft1.
template <CoefficientDomain D>
Polynomial<elt_t<D>> istep(const D& dom, const FftPlan<elt_t<D>>& plan,
                           const Polynomial<elt_t<D>>& p) {
  using E = elt_t<D>;
  detail::require_fits(p, plan.order());
  const unsigned n = plan.order();
  const std::size_t len = plan.length();
  std::vector<E> buf(len, dom.zero());
  const auto rev = bit_reversal_table(n);
  for (std::size_t i = 0; i < len; ++i) buf[i] = p.coeff(rev[i]);

  // squares[s] = w^(2^s)
  std::vector<E> squares(n == 0 ? 1 : n);
  squares[0] = plan.root();
  for (unsigned s = 1; s < n; ++s) squares[s] = dom.mul(squares[s - 1], squares[s - 1]);

  std::vector<E> twiddles;
  for (unsigned k = 0; k < n; ++k) {
    detail::butterfly_stage(dom, std::span<E>(buf), k, squares[n - 1 - k], twiddles);
  }
  return Polynomial<E>(std::move(buf));
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> istep(const D& dom, unsigned n, const elt_t<D>& w,
                           const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, n);
  return istep(dom, FftPlan<elt_t<D>>(dom, n, w), p);
}

/// istep as a literal fold: istep_aux m n w q applies step (m-1) n
/// (w^(2^(m-1))) and continues with (m-1, n+1), starting from
/// (n, 0, reverse_poly n p). Polynomial-valued and slow; kept to check the
/// buffer version against.
template <CoefficientDomain D>
Polynomial<elt_t<D>> istep_reference(const D& dom, const FftPlan<elt_t<D>>& plan,
                                     const Polynomial<elt_t<D>>& p) {
  detail::require_fits(p, plan.order());
  auto q = reverse_poly(plan.order(), p);
  unsigned width = 0;
  for (unsigned m = plan.order(); m-- > 0; ++width) {
    q = step(dom, m, width, pow(dom, plan.root(), std::uint64_t{1} << m), q);
  }
  return q;
}

/// Every intermediate of istep, from reverse_poly (depth n) to the final
/// transform (depth 0): n + 1 snapshots.
template <CoefficientDomain D>
std::vector<StageSnapshot<elt_t<D>>> stage_trace(const D& dom, const FftPlan<elt_t<D>>& plan,
                                                 const Polynomial<elt_t<D>>& p) {
  using E = elt_t<D>;
  detail::require_fits(p, plan.order());
  const unsigned n = plan.order();

  // roots[d] = w^(2^d), d = 0..n
  std::vector<E> roots(n + 1);
  roots[0] = plan.root();
  for (unsigned d = 1; d <= n; ++d) roots[d] = dom.mul(roots[d - 1], roots[d - 1]);

  std::vector<StageSnapshot<E>> out;
  out.reserve(n + 1);
  out.push_back({n, 0, roots[n], reverse_poly(n, p)});
  for (unsigned d = n; d-- > 0;) {
    const auto& prev = out.back();
    out.push_back({d, n - d, roots[d], step1(dom, d, n - d - 1, roots[d], prev.data)});
  }
  return out;
}

/// The stage-correctness predicate. With depth > 0, splits p into even/odd
/// parts and q into its low and high 2^(leaf + depth - 1) coefficients and
/// recurses on both pairs; at depth 0 requires q = fft1 leaf w p.
/// Exponential in depth; a test and tracing utility only.
template <CoefficientDomain D>
bool check_all_results(const D& dom, unsigned depth, unsigned leaf, const elt_t<D>& w,
                       const Polynomial<elt_t<D>>& p, const Polynomial<elt_t<D>>& q) {
  if (depth == 0) return poly_equal(dom, q, detail::fft1_rec(dom, leaf, w, p));
  const std::size_t cut = std::size_t{1} << (leaf + depth - 1);
  return check_all_results(dom, depth - 1, leaf, w, even_poly(p), take_poly(cut, q)) &&
         check_all_results(dom, depth - 1, leaf, w, odd_poly(p), drop_poly(cut, q));
}

}  // namespace radix2
