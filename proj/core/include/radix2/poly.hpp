#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a coefficient domain.
 *
 * A Polynomial stores coeffs[i] as the coefficient of X^i and is always
 * normalized: the last stored coefficient is nonzero, and the zero
 * polynomial is the empty sequence. size() is therefore degree + 1 for
 * nonzero polynomials.
 *
 * Purely structural operations (coefficient access, even/odd split,
 * take/drop, dilation, shifting) need no domain. Arithmetic takes the
 * domain explicitly.
 */

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ranges>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "radix2/algebra.hpp"
#include "radix2/error.hpp"

namespace radix2 {

template <std::regular E>
class Polynomial {
 public:
  using value_type = E;

  Polynomial() = default;
  explicit Polynomial(std::vector<E> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<E> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const E& c) { return Polynomial(std::vector<E>{c}); }

  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Coefficient of X^i; zero past the end.
  E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E{}; }
  std::span<const E> coeffs() const noexcept { return c_; }

  /// Coefficients padded with zeros (or truncated) to exactly `len` entries.
  std::vector<E> to_vector(std::size_t len) const {
    std::vector<E> out(len);
    std::copy_n(c_.begin(), std::min(len, c_.size()), out.begin());
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == E{}) c_.pop_back();
  }

  std::vector<E> c_;
};

/// uphalf i = (i + 1) / 2.
constexpr std::size_t uphalf(std::size_t i) noexcept { return (i + 1) / 2; }

/// Polynomial of size <= n whose i-th coefficient is f(i).
template <class F>
auto build(std::size_t n, F&& f) {
  using E = std::remove_cvref_t<std::invoke_result_t<F&, std::size_t>>;
  std::vector<E> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(f(i));
  return Polynomial<E>(std::move(c));
}

template <class D, class R>
  requires CoefficientDomain<D> && std::convertible_to<std::ranges::range_value_t<R>, elt_t<D>>
Polynomial<elt_t<D>> make_poly(const D&, const R& coeffs) {
  return Polynomial<elt_t<D>>(std::vector<elt_t<D>>(std::begin(coeffs), std::end(coeffs)));
}

/// Builds from natural-number literals through the domain's embedding,
/// e.g. make_poly(z17, {1, 2, 3, 4}).
template <CoefficientDomain D>
Polynomial<elt_t<D>> make_poly(const D& dom, std::initializer_list<std::uint64_t> naturals) {
  std::vector<elt_t<D>> c;
  c.reserve(naturals.size());
  for (auto v : naturals) c.push_back(dom.from_nat(v));
  return Polynomial<elt_t<D>>(std::move(c));
}

/// Horner evaluation p(x).
template <CoefficientDomain D>
elt_t<D> eval(const D& dom, const Polynomial<elt_t<D>>& p, const elt_t<D>& x) {
  elt_t<D> acc = dom.zero();
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = dom.add(dom.mul(acc, x), c[i]);
  return acc;
}

template <class E>
Polynomial<E> even_poly(const Polynomial<E>& p) {
  return build(uphalf(p.size()), [&](std::size_t i) { return p.coeff(2 * i); });
}

template <class E>
Polynomial<E> odd_poly(const Polynomial<E>& p) {
  return build(p.size() / 2, [&](std::size_t i) { return p.coeff(2 * i + 1); });
}

/// The m low-order terms of p.
template <class E>
Polynomial<E> take_poly(std::size_t m, const Polynomial<E>& p) {
  return build(std::min(m, p.size()), [&](std::size_t i) { return p.coeff(i); });
}

/// The terms of p from X^m upward, shifted down by m.
template <class E>
Polynomial<E> drop_poly(std::size_t m, const Polynomial<E>& p) {
  const std::size_t n = p.size() > m ? p.size() - m : 0;
  return build(n, [&](std::size_t i) { return p.coeff(i + m); });
}

/// p(X^k). Only composition with a monomial is supported.
template <class E>
Polynomial<E> dilate(const Polynomial<E>& p, std::size_t k) {
  if (k == 0) throw_error(ErrorKind::kInvalidArgument, "dilate requires k >= 1");
  if (p.is_zero()) return {};
  std::vector<E> c(k * (p.size() - 1) + 1);
  for (std::size_t i = 0; i < p.size(); ++i) c[k * i] = p.coeff(i);
  return Polynomial<E>(std::move(c));
}

/// p * X^m.
template <class E>
Polynomial<E> shift_mul_xm(const Polynomial<E>& p, std::size_t m) {
  if (p.is_zero()) return {};
  std::vector<E> c(m + p.size());
  std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(m));
  return Polynomial<E>(std::move(c));
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> add(const D& dom, const Polynomial<elt_t<D>>& p,
                         const Polynomial<elt_t<D>>& q) {
  return build(std::max(p.size(), q.size()),
               [&](std::size_t i) { return dom.add(p.coeff(i), q.coeff(i)); });
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> sub(const D& dom, const Polynomial<elt_t<D>>& p,
                         const Polynomial<elt_t<D>>& q) {
  return build(std::max(p.size(), q.size()),
               [&](std::size_t i) { return dom.sub(p.coeff(i), q.coeff(i)); });
}

template <CoefficientDomain D>
Polynomial<elt_t<D>> neg(const D& dom, const Polynomial<elt_t<D>>& p) {
  return build(p.size(), [&](std::size_t i) { return dom.neg(p.coeff(i)); });
}

/// a *: p
template <CoefficientDomain D>
Polynomial<elt_t<D>> scale(const D& dom, const elt_t<D>& a, const Polynomial<elt_t<D>>& p) {
  return build(p.size(), [&](std::size_t i) { return dom.mul(a, p.coeff(i)); });
}

/// Schoolbook O(size p * size q) convolution.
template <CoefficientDomain D>
Polynomial<elt_t<D>> naive_mul(const D& dom, const Polynomial<elt_t<D>>& p,
                               const Polynomial<elt_t<D>>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  // Local copy: stores into c must not be assumed to alias the domain's state.
  const D d = dom;
  std::vector<elt_t<D>> c(a.size() + b.size() - 1, d.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = d.add(c[i + j], d.mul(a[i], b[j]));
  }
  return Polynomial<elt_t<D>>(std::move(c));
}

/// Coefficient-wise domain equality over the longer of the two lengths.
/// Structural equality in exact domains; tolerance-based otherwise, which
/// sidesteps trailing coefficients that are only approximately zero.
template <CoefficientDomain D>
bool poly_equal(const D& dom, const Polynomial<elt_t<D>>& p, const Polynomial<elt_t<D>>& q) {
  if constexpr (D::kExact) {
    return p == q;
  } else {
    const std::size_t n = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!dom.eq(p.coeff(i), q.coeff(i))) return false;
    }
    return true;
  }
}

/// max_i |p_i - q_i| / max(1e-300, max_i |q_i|); 0 when both are zero.
/// Meant for floating-point element types.
template <class E>
double relative_linf_error(const Polynomial<E>& p, const Polynomial<E>& ref) {
  using std::abs;
  double diff = 0.0;
  double norm = 0.0;
  const std::size_t n = std::max(p.size(), ref.size());
  for (std::size_t i = 0; i < n; ++i) {
    diff = std::max(diff, static_cast<double>(abs(p.coeff(i) - ref.coeff(i))));
    norm = std::max(norm, static_cast<double>(abs(ref.coeff(i))));
  }
  if (diff == 0.0) return 0.0;
  return diff / std::max(norm, 1e-300);
}

}  // namespace radix2
