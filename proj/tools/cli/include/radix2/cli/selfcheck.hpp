#pragma once

// Randomized property suites over Z_998244353, one per correctness lemma
// of the transform library (fftE, fft₁E, step₁E, ...). Failing cases are
// shrunk greedily on their polynomial argument before being reported.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "radix2/poly.hpp"
#include "radix2/prime_field.hpp"

namespace radix2::cli {

struct SelfcheckOptions {
  unsigned trials = 200;
  std::uint64_t seed = 1;
  unsigned max_n = 6;
};

/// One generated instance. Lemmas use the fields they need.
struct LemmaCase {
  unsigned m = 0;
  unsigned n = 0;
  Zp w{};
  Polynomial<Zp> p;

  std::string describe() const;
};

struct Lemma {
  std::string name;
  std::function<LemmaCase(std::mt19937_64&, const SelfcheckOptions&)> generate;
  std::function<bool(const LemmaCase&)> holds;
};

struct LemmaResult {
  std::string name;
  unsigned run = 0;
  unsigned passed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return passed == run; }
};

/// The suites, in reporting order.
std::vector<Lemma> lemma_suites(const PrimeField& field);

LemmaResult run_lemma(const Lemma& lemma, const SelfcheckOptions& options);
std::vector<LemmaResult> run_selfcheck(const SelfcheckOptions& options);

/// Greedy shrink: repeatedly truncate, zero or set-to-one single
/// coefficients of p while `fails` keeps returning true.
Polynomial<Zp> shrink_poly(Polynomial<Zp> p, const std::function<bool(const Polynomial<Zp>&)>& fails);

}  // namespace radix2::cli
