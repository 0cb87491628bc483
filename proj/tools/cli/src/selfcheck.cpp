#include "radix2/cli/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "radix2/error.hpp"
#include "radix2/inverse.hpp"
#include "radix2/iterative.hpp"
#include "radix2/transform.hpp"

namespace radix2::cli {

std::string LemmaCase::describe() const {
  std::ostringstream out;
  out << "m=" << m << " n=" << n << " w=" << w.value << " p=[";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p.coeff(i).value;
  out << "]";
  return out.str();
}

namespace {

using Rng = std::mt19937_64;

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

Polynomial<Zp> random_poly(const PrimeField& f, Rng& rng, std::size_t max_size) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
  std::vector<Zp> c(size);
  for (auto& x : c) x = Zp{dist(rng)};
  return Polynomial<Zp>(std::move(c));
}

Zp random_elt(const PrimeField& f, Rng& rng) {
  return Zp{std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng)};
}

/// A random primitive 2^n-th root: an odd power of the canonical one.
Zp random_primitive(const PrimeField& f, Rng& rng, unsigned n) {
  const Zp root = f.root_of_order(n);
  if (n == 0) return root;
  const std::uint64_t k = 2 * std::uniform_int_distribution<std::uint64_t>(0, 1000)(rng) + 1;
  return pow(f, root, k);
}

std::size_t pow2(unsigned k) { return std::size_t{1} << k; }

/// Case with order n <= max_n, a primitive 2^n-th root, size p <= 2^n.
LemmaCase transform_case(const PrimeField& f, Rng& rng, const SelfcheckOptions& o) {
  LemmaCase c;
  c.n = uniform(rng, 0, o.max_n);
  c.w = random_primitive(f, rng, c.n);
  c.p = random_poly(f, rng, pow2(c.n));
  return c;
}

/// m + n + 1 <= max(max_n, 1), arbitrary w, size p <= 2^(m+n+1).
LemmaCase step_case(const PrimeField& f, Rng& rng, const SelfcheckOptions& o) {
  LemmaCase c;
  const unsigned total = std::max(o.max_n, 1U) - 1;
  c.m = uniform(rng, 0, total);
  c.n = uniform(rng, 0, total - c.m);
  c.w = random_elt(f, rng);
  c.p = random_poly(f, rng, pow2(c.m + c.n + 1));
  return c;
}

}  // namespace

std::vector<Lemma> lemma_suites(const PrimeField& field) {
  const PrimeField f = field;
  std::vector<Lemma> out;
  auto transform_gen = [f](Rng& rng, const SelfcheckOptions& o) { return transform_case(f, rng, o); };
  auto step_gen = [f](Rng& rng, const SelfcheckOptions& o) { return step_case(f, rng, o); };

  out.push_back({"fftE", transform_gen, [f](const LemmaCase& c) {
                   const FftPlan<Zp> plan(f, c.n, c.w);
                   return fft(f, plan, c.p) == naive_dft(f, plan, c.p);
                 }});
  out.push_back({"fft₁E", transform_gen, [f](const LemmaCase& c) {
                   return fft1(f, c.n, c.w, c.p) == fft(f, c.n, c.w, c.p);
                 }});
  out.push_back({"step₁E", step_gen, [f](const LemmaCase& c) {
                   return step1(f, c.m, c.n, c.w, c.p) == step(f, c.m, c.n, c.w, c.p);
                 }});
  out.push_back({"istep_fft₁", transform_gen, [f](const LemmaCase& c) {
                   const FftPlan<Zp> plan(f, c.n, c.w);
                   return istep(f, plan, c.p) == fft1(f, plan, c.p) &&
                          istep_reference(f, plan, c.p) == fft1(f, plan, c.p);
                 }});
  out.push_back({"fftK", transform_gen, [f](const LemmaCase& c) {
                   const FftPlan<Zp> plan(f, c.n, c.w);
                   return ifft(f, plan, fft(f, plan, c.p), Engine::kRecursive) == c.p;
                 }});
  out.push_back({"poly_take_drop",
                 [f](Rng& rng, const SelfcheckOptions& o) {
                   LemmaCase c;
                   c.p = random_poly(f, rng, pow2(o.max_n) + 2);
                   c.m = uniform(rng, 0, static_cast<unsigned>(pow2(o.max_n)) + 4);
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   return add(f, take_poly(c.m, c.p), shift_mul_xm(drop_poly(c.m, c.p), c.m)) == c.p;
                 }});
  out.push_back({"poly_even_odd",
                 [f](Rng& rng, const SelfcheckOptions& o) {
                   LemmaCase c;
                   c.p = random_poly(f, rng, pow2(o.max_n) + 1);
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   return add(f, dilate(even_poly(c.p), 2), shift_mul_xm(dilate(odd_poly(c.p), 2), 1)) ==
                          c.p;
                 }});
  out.push_back({"reverse_polyS",
                 [f](Rng& rng, const SelfcheckOptions& o) {
                   LemmaCase c;
                   c.n = uniform(rng, 0, std::max(o.max_n, 1U) - 1);
                   c.p = random_poly(f, rng, pow2(c.n + 1) + 2);
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   return reverse_poly(c.n + 1, c.p) ==
                          add(f, reverse_poly(c.n, even_poly(c.p)),
                              shift_mul_xm(reverse_poly(c.n, odd_poly(c.p)), pow2(c.n)));
                 }});
  auto take_drop_gen = [f](Rng& rng, const SelfcheckOptions& o) {
    LemmaCase c;
    const unsigned total = std::max(o.max_n, 1U) - 1;
    c.m = uniform(rng, 0, total);
    c.n = uniform(rng, 0, total - c.m);
    c.w = random_elt(f, rng);
    c.p = random_poly(f, rng, pow2(c.m + c.n + 2));
    return c;
  };
  out.push_back({"take_step", take_drop_gen, [f](const LemmaCase& c) {
                   const std::size_t cut = pow2(c.m + c.n + 1);
                   return take_poly(cut, step(f, c.m + 1, c.n, c.w, c.p)) ==
                          step(f, c.m, c.n, c.w, take_poly(cut, c.p));
                 }});
  out.push_back({"drop_step", take_drop_gen, [f](const LemmaCase& c) {
                   const std::size_t cut = pow2(c.m + c.n + 1);
                   return drop_poly(cut, step(f, c.m + 1, c.n, c.w, c.p)) ==
                          step(f, c.m, c.n, c.w, drop_poly(cut, c.p));
                 }});
  out.push_back({"all_results_fft₁_reverse_poly", transform_gen, [f](const LemmaCase& c) {
                   return check_all_results(f, c.n, 0, c.w, c.p, reverse_poly(c.n, c.p));
                 }});
  out.push_back({"all_results_fft₁_step",
                 [f](Rng& rng, const SelfcheckOptions& o) {
                   LemmaCase c;
                   const unsigned total = std::max(o.max_n, 1U) - 1;
                   c.m = uniform(rng, 0, total);
                   c.n = uniform(rng, 0, total - c.m);
                   // w: primitive 2^(m+n+1)-th root of the whole pipeline
                   c.w = random_primitive(f, rng, c.m + c.n + 1);
                   c.p = random_poly(f, rng, pow2(c.m + c.n + 1));
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   // q: the depth-(m+1) stage of p's pipeline, so the hypothesis holds
                   const unsigned order = c.m + c.n + 1;
                   auto q = reverse_poly(order, c.p);
                   for (unsigned k = 0; k < c.n; ++k) {
                     q = step(f, order - 1 - k, k, pow(f, c.w, std::uint64_t{1} << (order - 1 - k)), q);
                   }
                   const Zp stage_root = pow(f, c.w, std::uint64_t{1} << c.m);
                   const Zp squared = f.mul(stage_root, stage_root);
                   return check_all_results(f, c.m + 1, c.n, squared, c.p, q) &&
                          check_all_results(f, c.m, c.n + 1, stage_root, c.p,
                                            step(f, c.m, c.n, stage_root, q));
                 }});
  out.push_back({"prim_exp2nS",
                 [f](Rng& rng, const SelfcheckOptions&) {
                   LemmaCase c;
                   c.n = uniform(rng, 1, f.max_order());
                   c.w = random_primitive(f, rng, c.n);
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   return pow(f, c.w, std::uint64_t{1} << (c.n - 1)) == f.neg(f.one());
                 }});
  out.push_back({"prim_sqr",
                 [f](Rng& rng, const SelfcheckOptions&) {
                   LemmaCase c;
                   c.n = uniform(rng, 1, f.max_order());
                   c.w = random_primitive(f, rng, c.n);
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   return is_primitive_root(f, f.mul(c.w, c.w), std::uint64_t{1} << (c.n - 1)) &&
                          halve_root(f, FftPlan<Zp>(f, c.n, c.w)).validated();
                 }});
  // A non-primitive root must be refused at the entry point, never transformed.
  out.push_back({"invalid_root_gate",
                 [f](Rng& rng, const SelfcheckOptions& o) {
                   LemmaCase c;
                   c.n = uniform(rng, 1, std::max(o.max_n, 1U));
                   const Zp primitive = random_primitive(f, rng, c.n);
                   c.w = f.mul(primitive, primitive);  // order 2^(n-1)
                   c.p = random_poly(f, rng, pow2(c.n));
                   return c;
                 },
                 [f](const LemmaCase& c) {
                   try {
                     (void)fft(f, c.n, c.w, c.p);
                   } catch (const Error& e) {
                     return e.kind() == ErrorKind::kInvalidRoot;
                   }
                   return false;
                 }});
  return out;
}

Polynomial<Zp> shrink_poly(Polynomial<Zp> p,
                           const std::function<bool(const Polynomial<Zp>&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Polynomial<Zp>> candidates;
    if (!p.is_zero()) candidates.push_back(take_poly(p.size() - 1, p));
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto c = p.to_vector(p.size());
      if (c[i] != Zp{}) {
        c[i] = Zp{};
        candidates.emplace_back(c);
      }
      if (p.coeff(i) != Zp{1} && p.coeff(i) != Zp{}) {
        c[i] = Zp{1};
        candidates.emplace_back(c);
      }
    }
    for (const auto& cand : candidates) {
      if (fails(cand)) {
        p = cand;
        progress = true;
        break;
      }
    }
  }
  return p;
}

LemmaResult run_lemma(const Lemma& lemma, const SelfcheckOptions& options) {
  LemmaResult result{lemma.name, 0, 0, std::nullopt};
  std::seed_seq seq(lemma.name.begin(), lemma.name.end());
  std::vector<std::uint32_t> salt(1);
  seq.generate(salt.begin(), salt.end());
  Rng rng(options.seed ^ (std::uint64_t{salt[0]} << 32U));

  auto fails = [&](const LemmaCase& c) {
    try {
      return !lemma.holds(c);
    } catch (const std::exception&) {
      return true;
    }
  };

  for (unsigned t = 0; t < options.trials; ++t) {
    const LemmaCase c = lemma.generate(rng, options);
    ++result.run;
    if (!fails(c)) {
      ++result.passed;
      continue;
    }
    if (!result.counterexample) {
      LemmaCase minimal = c;
      minimal.p = shrink_poly(c.p, [&](const Polynomial<Zp>& p) {
        LemmaCase probe = c;
        probe.p = p;
        return fails(probe);
      });
      std::string detail = minimal.describe();
      try {
        (void)lemma.holds(minimal);
      } catch (const std::exception& e) {
        detail += " (threw: " + std::string(e.what()) + ")";
      }
      result.counterexample = detail;
    }
  }
  return result;
}

std::vector<LemmaResult> run_selfcheck(const SelfcheckOptions& options) {
  std::vector<LemmaResult> out;
  for (const auto& lemma : lemma_suites(PrimeField::ntt_default())) {
    out.push_back(run_lemma(lemma, options));
  }
  return out;
}

}  // namespace radix2::cli
