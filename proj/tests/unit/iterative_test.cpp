#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "radix2/complex_field.hpp"
#include "radix2/iterative.hpp"
#include "radix2/prime_field.hpp"
#include "support/oracles.hpp"

namespace radix2 {
namespace {

using testing::random_poly;

const PrimeField kZ17(17);
const PrimeField kNtt = PrimeField::ntt_default();

Polynomial<Zp> z17(std::initializer_list<std::uint64_t> c) { return make_poly(kZ17, c); }

TEST(DigitTest, Digitn) {
  EXPECT_EQ(digitn(2, 6, 0), 0U);
  EXPECT_EQ(digitn(2, 6, 1), 1U);
  EXPECT_EQ(digitn(10, 345, 2), 3U);
  EXPECT_EQ(digitn(10, 345, 9), 0U);
  EXPECT_EQ(digitn(2, 1, 200), 0U);  // b^m overflows; digit is still 0
  EXPECT_THROW((void)digitn(1, 5, 0), Error);
}

TEST(DigitTest, RdigitnReversalTable) {
  const std::vector<std::uint64_t> table{0, 4, 2, 6, 1, 5, 3, 7};
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(rdigitn(2, 3, i), table[i]) << i;
  EXPECT_EQ(rdigitn(10, 3, 12), 210U);
  EXPECT_EQ(rdigitn(2, 0, 0), 0U);
  EXPECT_THROW((void)rdigitn(2, 3, 8), Error);
  EXPECT_THROW((void)rdigitn(0, 3, 1), Error);
}

// rdigitn b n (rdigitn b n m) = m, so reversal is a permutation.
TEST(DigitTest, RdigitnInvolution) {
  for (std::uint64_t b : {2ULL, 3ULL}) {
    for (std::uint64_t n = 0; n <= 10; ++n) {
      std::uint64_t bn = 1;
      for (std::uint64_t k = 0; k < n; ++k) bn *= b;
      if (bn > 60000) continue;
      std::set<std::uint64_t> seen;
      for (std::uint64_t m = 0; m < bn; ++m) {
        const auto r = rdigitn(b, n, m);
        ASSERT_LT(r, bn);
        ASSERT_EQ(rdigitn(b, n, r), m);
        seen.insert(r);
      }
      ASSERT_EQ(seen.size(), bn);
    }
  }
}

// The digit-sum definition: sum_(i < n) digitn b m (n - 1 - i) * b^i.
TEST(DigitTest, RdigitnMatchesDigitSum) {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      std::uint64_t sum = 0;
      for (std::uint64_t i = 0; i < n; ++i) sum += digitn(2, m, n - 1 - i) << i;
      ASSERT_EQ(rdigitn(2, n, m), sum);
    }
  }
}

TEST(DigitTest, BitReversalTable) {
  for (unsigned n = 0; n <= 12; ++n) {
    const auto t = bit_reversal_table(n);
    ASSERT_EQ(t.size(), std::size_t{1} << n);
    for (std::size_t i = 0; i < t.size(); ++i) ASSERT_EQ(t[i], rdigitn(2, n, i));
  }
}

TEST(ReversePolyTest, WorkedValues) {
  EXPECT_EQ(reverse_poly(3, z17({10, 11, 12, 13, 14, 15, 16, 1})),
            z17({10, 14, 12, 16, 11, 15, 13, 1}));
  EXPECT_EQ(reverse_poly(2, z17({1, 2, 3, 4})), z17({1, 3, 2, 4}));
  EXPECT_EQ(reverse_poly(0, z17({6, 2, 3})), z17({6}));
  EXPECT_TRUE(reverse_poly(3, Polynomial<Zp>()).is_zero());
}

// reverse_poly (n+1) p = reverse_poly n (even p) + reverse_poly n (odd p) * X^(2^n)
TEST(ReversePolyTest, RecurrenceOnEvenOdd) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const unsigned n = rng() % 8;
    const auto p = random_poly(kNtt, rng, rng() % ((std::size_t{2} << n) + 3));
    const auto rhs = add(kNtt, reverse_poly(n, even_poly(p)),
                         shift_mul_xm(reverse_poly(n, odd_poly(p)), std::size_t{1} << n));
    ASSERT_EQ(reverse_poly(n + 1, p), rhs);
  }
}

TEST(StepTest, WorkedValues) {
  EXPECT_EQ(step(kZ17, 0, 0, Zp{1}, z17({3, 5})), z17({8, 15}));
  EXPECT_EQ(step1(kZ17, 0, 0, Zp{1}, z17({3, 5})), z17({8, 15}));
  EXPECT_TRUE(step(kZ17, 2, 1, Zp{4}, Polynomial<Zp>()).is_zero());
  EXPECT_TRUE(step1(kZ17, 2, 1, Zp{4}, Polynomial<Zp>()).is_zero());

  // Two stages by hand on p = 1 + 2X + 3X^2 + 4X^3: reverse -> [1,3,2,4],
  // stage 0 with w^2 = 16 -> [4,15,6,15], stage 1 with w = 4 -> [10,7,15,6].
  const auto p = z17({1, 2, 3, 4});
  const auto r = reverse_poly(2, p);
  const auto s0 = step(kZ17, 1, 0, Zp{16}, r);
  EXPECT_EQ(s0, z17({4, 15, 6, 15}));
  EXPECT_EQ(step(kZ17, 0, 1, Zp{4}, s0), z17({10, 7, 15, 6}));
  EXPECT_EQ(step1(kZ17, 0, 1, Zp{4}, step1(kZ17, 1, 0, Zp{16}, r)), z17({10, 7, 15, 6}));
}

TEST(StepTest, SizePrecondition) {
  try {
    (void)step(kZ17, 0, 1, Zp{4}, z17({1, 2, 3, 4, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeExceedsOrder);
  }
  EXPECT_THROW((void)step1(kZ17, 1, 0, Zp{4}, z17({1, 2, 3, 4, 5})), Error);
}

TEST(StepProperty, IndexedFormEqualsBlockSum) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint32_t> dist(0, 16);
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (int t = 0; t < 60; ++t) {
        // any w, primitive or not: the identity is purely algebraic
        const Zp w{dist(rng)};
        const auto p = random_poly(kZ17, rng, rng() % ((std::size_t{2} << (m + n)) + 1));
        const auto s = step(kZ17, m, n, w, p);
        ASSERT_EQ(step1(kZ17, m, n, w, p), s);
        ASSERT_LE(s.size(), std::size_t{2} << (m + n));
      }
    }
  }
}

// take/drop of the low 2^(m+n+1) coefficients commutes with one more block.
TEST(StepProperty, TakeAndDropCommute) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> dist(0, kNtt.modulus() - 1);
  for (int t = 0; t < 300; ++t) {
    const unsigned m = rng() % 4;
    const unsigned n = rng() % (5 - m);
    const Zp w{dist(rng)};
    const std::size_t cut = std::size_t{2} << (m + n);
    const auto p = random_poly(kNtt, rng, rng() % (2 * cut + 1));
    const auto big = step(kNtt, m + 1, n, w, p);
    ASSERT_EQ(take_poly(cut, big), step(kNtt, m, n, w, take_poly(cut, p)));
    ASSERT_EQ(drop_poly(cut, big), step(kNtt, m, n, w, drop_poly(cut, p)));
  }
}

TEST(IstepTest, WorkedValues) {
  EXPECT_EQ(istep(kZ17, 0, Zp{1}, z17({9})), z17({9}));
  EXPECT_EQ(istep(kZ17, 2, Zp{4}, z17({1, 2, 3, 4})), z17({10, 7, 15, 6}));
  EXPECT_TRUE(istep(kZ17, 3, Zp{2}, Polynomial<Zp>()).is_zero());
  EXPECT_EQ(istep_reference(kZ17, FftPlan<Zp>(kZ17, 2, Zp{4}), z17({1, 2, 3, 4})),
            z17({10, 7, 15, 6}));
  EXPECT_THROW((void)istep(kZ17, 2, Zp{16}, z17({1})), Error);
  EXPECT_THROW((void)istep(kZ17, 1, Zp{16}, z17({1, 2, 3})), Error);
}

TEST(IstepProperty, MatchesButterflyRecursion) {
  std::mt19937_64 rng(4);
  for (unsigned n = 0; n <= 10; ++n) {
    const auto plan = primitive_root_of_order(kNtt, n);
    for (int t = 0; t < 20; ++t) {
      const auto p = random_poly(kNtt, rng, rng() % (plan.length() + 1));
      const auto expected = fft1(kNtt, plan, p);
      ASSERT_EQ(istep(kNtt, plan, p), expected) << n;
      if (n <= 8) ASSERT_EQ(istep_reference(kNtt, plan, p), expected) << n;
    }
  }
}

TEST(StageTraceTest, ShapeAndEndpoints) {
  const FftPlan<Zp> plan(kZ17, 2, Zp{4});
  const auto p = z17({1, 2, 3, 4});
  const auto trace = stage_trace(kZ17, plan, p);
  ASSERT_EQ(trace.size(), 3U);
  EXPECT_EQ(trace.front().depth, 2U);
  EXPECT_EQ(trace.front().data, z17({1, 3, 2, 4}));
  EXPECT_EQ(trace.front().root, Zp{1});
  EXPECT_EQ(trace[1].root, Zp{16});
  EXPECT_EQ(trace.back().depth, 0U);
  EXPECT_EQ(trace.back().root, Zp{4});
  EXPECT_EQ(trace.back().data, z17({10, 7, 15, 6}));
  for (const auto& s : trace) {
    EXPECT_TRUE(check_all_results(kZ17, s.depth, s.width, s.root, p, s.data)) << s.depth;
  }
}

TEST(CheckAllResultsTest, Definitional) {
  const auto p = z17({1, 2, 3, 4});
  EXPECT_TRUE(check_all_results(kZ17, 0, 2, Zp{4}, p, fft1(kZ17, 2, Zp{4}, p)));
  EXPECT_TRUE(check_all_results(kZ17, 2, 0, Zp{4}, p, reverse_poly(2, p)));
  EXPECT_FALSE(check_all_results(kZ17, 0, 1, Zp{16}, z17({3, 5}), z17({8})));
  EXPECT_FALSE(check_all_results(kZ17, 2, 0, Zp{4}, p, p));  // not bit-reversed
}

TEST(CheckAllResultsProperty, ReversePolyHoldsAllLeaves) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> dist(0, kNtt.modulus() - 1);
  for (unsigned n = 0; n <= 6; ++n) {
    for (int t = 0; t < 30; ++t) {
      const auto p = random_poly(kNtt, rng, rng() % ((std::size_t{1} << n) + 1));
      ASSERT_TRUE(check_all_results(kNtt, n, 0, Zp{dist(rng)}, p, reverse_poly(n, p)));
    }
  }
}

// all_results (m+1) n w^2 p q  ->  all_results m (n+1) w p (step m n w q)
TEST(CheckAllResultsProperty, StepAdvancesOneLevel) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const unsigned m = rng() % 5;
    const unsigned n = rng() % (5 - m);
    const auto plan = primitive_root_of_order(kNtt, m + n + 1);
    const Zp w = pow(kNtt, plan.root(), std::uint64_t{1} << m);  // primitive 2^(n+1)-th
    const Zp w2 = kNtt.mul(w, w);
    const auto p = random_poly(kNtt, rng, rng() % ((std::size_t{2} << (m + n)) + 1));
    // q built so the hypothesis holds: the depth-(m+1) stage of p's pipeline
    auto q = reverse_poly(m + n + 1, p);
    for (unsigned k = 0; k < n; ++k) {
      q = step(kNtt, m + n - k, k, pow(kNtt, plan.root(), std::uint64_t{1} << (m + n - k)), q);
    }
    ASSERT_TRUE(check_all_results(kNtt, m + 1, n, w2, p, q));
    ASSERT_TRUE(check_all_results(kNtt, m, n + 1, w, p, step(kNtt, m, n, w, q)));
    // perturbing q breaks the hypothesis and the conclusion
    if (!q.is_zero()) {
      auto bad = q.to_vector(q.size());
      bad[rng() % bad.size()] = kNtt.add(bad[0], kNtt.one());
      const Polynomial<Zp> qbad(bad);
      if (qbad != q) ASSERT_FALSE(check_all_results(kNtt, m + 1, n, w2, p, qbad));
    }
  }
}

TEST(IterativeProperty, ComplexMatchesRecursive) {
  std::mt19937_64 rng(7);
  const ComplexField c;
  for (unsigned n = 0; n <= 12; ++n) {
    const auto plan = primitive_root_of_order(c, n);
    const auto p = testing::random_complex_poly(rng, plan.length());
    ASSERT_LE(relative_linf_error(istep(c, plan, p), fft1(c, plan, p)), 1e-9);
  }
  const auto plan = primitive_root_of_order(c, 3);
  const auto p = testing::random_complex_poly(rng, 8);
  for (const auto& s : stage_trace(c, plan, p)) {
    EXPECT_TRUE(check_all_results(c, s.depth, s.width, s.root, p, s.data));
  }
}

}  // namespace
}  // namespace radix2
