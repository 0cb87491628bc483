#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "radix2/complex_field.hpp"
#include "radix2/prime_field.hpp"
#include "radix2/transform.hpp"
#include "support/oracles.hpp"

namespace radix2 {
namespace {

using testing::random_poly;

const PrimeField kZ17(17);
const PrimeField kNtt = PrimeField::ntt_default();

Polynomial<Zp> z17(std::initializer_list<std::uint64_t> c) { return make_poly(kZ17, c); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected radix2::Error";
  return ErrorKind::kInvalidArgument;
}

// Hand evaluation at 1, 4, 16, 13: 10, 313 = 7, -2 = 15, -215 = 6 (mod 17).
TEST(TransformTest, WorkedExampleZ17) {
  const FftPlan<Zp> plan(kZ17, 2, Zp{4});
  const auto p = z17({1, 2, 3, 4});
  const auto expected = z17({10, 7, 15, 6});
  EXPECT_EQ(naive_dft(kZ17, plan, p), expected);
  EXPECT_EQ(fft(kZ17, 2, Zp{4}, p), expected);
  EXPECT_EQ(fft1(kZ17, 2, Zp{4}, p), expected);
  EXPECT_EQ(testing::residues(expected, 4), testing::dft_mod({1, 2, 3, 4}, 4, 17, 4));
}

TEST(TransformTest, BaseCasesAndZero) {
  const FftPlan<Zp> unit(kZ17, 0, Zp{1});
  EXPECT_EQ(naive_dft(kZ17, unit, z17({7})), z17({7}));
  EXPECT_EQ(fft(kZ17, 0, Zp{1}, z17({5})), z17({5}));
  EXPECT_EQ(fft1(kZ17, 0, Zp{1}, z17({5})), z17({5}));
  for (unsigned n = 0; n <= 4; ++n) {
    const auto plan = primitive_root_of_order(kZ17, n);
    EXPECT_TRUE(fft(kZ17, plan, Polynomial<Zp>()).is_zero());
    EXPECT_TRUE(fft1(kZ17, plan, Polynomial<Zp>()).is_zero());
    EXPECT_TRUE(naive_dft(kZ17, plan, Polynomial<Zp>()).is_zero());
  }
}

// ev = 3, ov = 5, w^0 = 1: (3 + 5, 3 - 5) = (8, 15).
TEST(TransformTest, SingleButterfly) {
  EXPECT_EQ(fft1(kZ17, 1, Zp{16}, z17({3, 5})), z17({8, 15}));
  EXPECT_EQ(fft(kZ17, 1, Zp{16}, z17({3, 5})), z17({8, 15}));
}

TEST(TransformTest, Preconditions) {
  const auto p5 = z17({1, 2, 3, 4, 5});
  EXPECT_EQ(kind_of([&] { (void)fft(kZ17, 2, Zp{4}, p5); }), ErrorKind::kSizeExceedsOrder);
  EXPECT_EQ(kind_of([&] { (void)fft1(kZ17, 2, Zp{4}, p5); }), ErrorKind::kSizeExceedsOrder);
  EXPECT_EQ(kind_of([&] { (void)naive_dft(kZ17, FftPlan<Zp>(kZ17, 2, Zp{4}), p5); }),
            ErrorKind::kSizeExceedsOrder);
  // 16 has order 2, not 4: rejected rather than silently producing a wrong answer
  EXPECT_EQ(kind_of([&] { (void)fft(kZ17, 2, Zp{16}, z17({1, 2})); }), ErrorKind::kInvalidRoot);
  EXPECT_EQ(kind_of([&] { (void)fft1(kZ17, 2, Zp{2}, z17({1, 2})); }), ErrorKind::kInvalidRoot);
}

TEST(TransformProperty, RecursiveMatchesDirectSummation) {
  std::mt19937_64 rng(42);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto plan = primitive_root_of_order(kNtt, n);
    for (int t = 0; t < 40; ++t) {
      const auto p = random_poly(kNtt, rng, rng() % (plan.length() + 1));
      const auto expected = testing::from_residues(testing::dft_mod(
          testing::residues(p, p.size()), plan.root().value, kNtt.modulus(), plan.length()));
      const auto f = fft(kNtt, plan, p);
      ASSERT_EQ(f, expected) << "n=" << n;
      ASSERT_EQ(naive_dft(kNtt, plan, p), expected);
      ASSERT_EQ(fft1(kNtt, plan, p), f);
      ASSERT_LE(f.size(), plan.length());
    }
  }
}

TEST(TransformProperty, ExhaustiveZ17OrderTwo) {
  const FftPlan<Zp> plan(kZ17, 2, Zp{4});
  std::size_t count = 0;
  testing::for_each_vector(17, 4, [&](const Polynomial<Zp>& p) {
    const auto ref = naive_dft(kZ17, plan, p);
    ASSERT_EQ(fft(kZ17, plan, p), ref);
    ASSERT_EQ(fft1(kZ17, plan, p), ref);
    ++count;
  });
  EXPECT_EQ(count, 17U * 17 * 17 * 17);
}

// Every primitive root of every supported order, not just the canonical one.
TEST(TransformProperty, AllPrimitiveRootsZ17) {
  std::mt19937_64 rng(9);
  for (unsigned n = 0; n <= 4; ++n) {
    for (std::uint32_t w = 1; w < 17; ++w) {
      if (!is_primitive_root(kZ17, Zp{w}, std::uint64_t{1} << n)) continue;
      const FftPlan<Zp> plan(kZ17, n, Zp{w});
      for (int t = 0; t < 20; ++t) {
        const auto p = random_poly(kZ17, rng, rng() % (plan.length() + 1));
        ASSERT_EQ(fft(kZ17, plan, p), naive_dft(kZ17, plan, p));
        ASSERT_EQ(fft1(kZ17, plan, p), naive_dft(kZ17, plan, p));
      }
    }
  }
}

TEST(TransformProperty, Linearity) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint32_t> dist(0, kNtt.modulus() - 1);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto plan = primitive_root_of_order(kNtt, n);
    for (int t = 0; t < 20; ++t) {
      const auto p = random_poly(kNtt, rng, plan.length());
      const auto q = random_poly(kNtt, rng, plan.length());
      const Zp a{dist(rng)};
      ASSERT_EQ(fft(kNtt, plan, add(kNtt, scale(kNtt, a, p), q)),
                add(kNtt, scale(kNtt, a, fft(kNtt, plan, p)), fft(kNtt, plan, q)));
    }
  }
}

TEST(TransformProperty, ComplexWithinTolerance) {
  std::mt19937_64 rng(10);
  const ComplexField c(1e-9);
  for (unsigned n = 0; n <= 12; ++n) {
    const auto plan = primitive_root_of_order(c, n);
    const auto p = testing::random_complex_poly(rng, plan.length());
    const std::vector<std::complex<double>> raw(p.coeffs().begin(), p.coeffs().end());
    const Polynomial<std::complex<double>> ref(testing::dft_complex(raw, -1, plan.length()));
    ASSERT_LE(relative_linf_error(fft(c, plan, p), ref), 1e-9) << n;
    ASSERT_LE(relative_linf_error(fft1(c, plan, p), ref), 1e-9) << n;
    if (n <= 9) ASSERT_LE(relative_linf_error(naive_dft(c, plan, p), ref), 1e-9) << n;
  }
}

}  // namespace
}  // namespace radix2
