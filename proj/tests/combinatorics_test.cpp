#include "pnt/combinatorics.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pnt/random.hpp"

namespace pnt {
namespace {

Tabulated<Rational> rational_fn(std::uint64_t limit, auto fn) { return Tabulated<Rational>::from(limit, fn); }

TEST(DivisorSum, Examples) {
  const auto id = rational_fn(10, [](std::uint64_t n) { return Rational(n); });
  EXPECT_EQ(divisor_sum(6, id), Rational(12));
  const auto mu = rational_fn(10, [](std::uint64_t n) { return Rational(moebius(n)); });
  EXPECT_EQ(divisor_sum(4, mu), Rational(0));
  EXPECT_EQ(divisor_sum(1, mu), Rational(1));
  EXPECT_EQ(divisor_sum_reflected(6, id), Rational(12));
}

TEST(DivisorSum, RejectsOutsideDomain) {
  const auto id = rational_fn(10, [](std::uint64_t n) { return Rational(n); });
  EXPECT_THROW(divisor_sum(0, id), DomainError);
  EXPECT_THROW(divisor_sum(11, id), DomainError);
  EXPECT_THROW(divisor_sum_reflected(11, id), DomainError);
  EXPECT_THROW(moebius_invert(id, 0), DomainError);
  EXPECT_THROW(Tabulated<Rational>(std::vector<Rational>{}), DomainError);
}

TEST(DivisorSum, VariantDispatch) {
  const TabulatedFunction exact = rational_fn(10, [](std::uint64_t n) { return Rational(n); });
  const TabulatedFunction real = Tabulated<double>::from(10, [](std::uint64_t n) { return 0.5 * n; });
  EXPECT_TRUE(values_agree(divisor_sum(6, exact), Value(Rational(12))));
  EXPECT_TRUE(values_agree(divisor_sum(6, real), Value(6.0)));
  EXPECT_FALSE(values_agree(Value(Rational(6)), Value(6.0)));
  EXPECT_THROW(partial_summation_lhs(exact, real, 1, 2), DomainError);
}

TEST(TriangleSum, Examples) {
  const auto one = [](std::uint64_t, std::uint64_t) { return std::int64_t{1}; };
  EXPECT_EQ(triangle_sum_lhs(1, one), 1);
  EXPECT_EQ(triangle_sum_rhs(1, one), 1);
  EXPECT_EQ(triangle_sum_lhs(2, one), 3);
  EXPECT_EQ(triangle_sum_rhs(2, one), 3);
  EXPECT_EQ(triangle_sum_lhs(4, one), 8);
  EXPECT_EQ(triangle_sum_rhs(4, one), 8);
  EXPECT_THROW(triangle_sum_lhs(0, one), DomainError);
  EXPECT_THROW(triangle_sum_rhs(0, one), DomainError);
}

TEST(DivisorPairSum, Examples) {
  const auto one = [](std::uint64_t, std::uint64_t) { return std::int64_t{1}; };
  EXPECT_EQ(divisor_pair_sum_lhs(4, one), 6);
  EXPECT_EQ(divisor_pair_sum_rhs(4, one), 6);
  const auto prod = [](std::uint64_t d, std::uint64_t e) { return static_cast<std::int64_t>(d * e); };
  EXPECT_EQ(divisor_pair_sum_lhs(6, prod), 35);
  EXPECT_EQ(divisor_pair_sum_rhs(6, prod), 35);
  EXPECT_THROW(divisor_pair_sum_lhs(0, one), DomainError);
}

TEST(MoebiusDivisorSum, Examples) {
  EXPECT_EQ(moebius_divisor_sum(1), 1);
  EXPECT_EQ(moebius_divisor_sum(6), 0);
  EXPECT_EQ(moebius_divisor_sum(12), 0);
  for (std::uint64_t n = 2; n <= 5000; ++n) ASSERT_EQ(moebius_divisor_sum(n), 0) << n;
  EXPECT_THROW(moebius_divisor_sum(0), DomainError);
}

TEST(MoebiusInvert, DivisorCountRecoversOne) {
  const auto tau = rational_fn(100, [](std::uint64_t n) { return Rational(divisors(n).size()); });
  for (std::uint64_t n = 1; n <= 100; ++n) EXPECT_EQ(moebius_invert(tau, n), Rational(1)) << n;
}

TEST(MoebiusInvert, LogRecoversMangoldt) {
  const auto ln = Tabulated<double>::from(100, [](std::uint64_t n) { return std::log(static_cast<double>(n)); });
  EXPECT_NEAR(moebius_invert(ln, 4), std::log(2.0), 1e-12);
  for (std::uint64_t n = 1; n <= 100; ++n) EXPECT_NEAR(moebius_invert(ln, n), mangoldt(n), 1e-12) << n;
}

TEST(PartialSummation, Examples) {
  const auto one = rational_fn(10, [](std::uint64_t) { return Rational(1); });
  const auto id = rational_fn(10, [](std::uint64_t n) { return Rational(n); });
  // f = 1, G = 1 on [1, 2]: lhs = 2.
  EXPECT_EQ(partial_summation_lhs(one, one, 1, 2), Rational(2));
  EXPECT_EQ(partial_summation_rhs(one, one, 1, 2), Rational(2));
  // f = G = id on [1, 3]: 2*2 + 3*3 + 4*4 = 29.
  EXPECT_EQ(partial_summation_lhs(id, id, 1, 3), Rational(29));
  EXPECT_EQ(partial_summation_rhs(id, id, 1, 3), Rational(29));

  const auto f = Tabulated<double>::from(10, [](std::uint64_t n) { return 1.0 / n; });
  const auto g = Tabulated<double>::from(10, [](std::uint64_t n) { return std::log(static_cast<double>(n)); });
  EXPECT_NEAR(partial_summation_lhs(f, g, 2, 4), partial_summation_rhs(f, g, 2, 4), 1e-12);
}

TEST(PartialSummation, DomainChecks) {
  const auto one = rational_fn(5, [](std::uint64_t) { return Rational(1); });
  EXPECT_THROW(partial_summation_lhs(one, one, 0, 1), DomainError);
  EXPECT_THROW(partial_summation_lhs(one, one, 3, 2), DomainError);
  EXPECT_THROW(partial_summation_rhs(one, one, 1, 4), DomainError);
  EXPECT_NO_THROW(partial_summation_rhs(one, one, 1, 3));
}

TEST(DivisorTable, MatchesTrialDivision) {
  const DivisorTable table(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto span = table(n);
    ASSERT_EQ(std::vector<std::uint64_t>(span.begin(), span.end()), divisors(n)) << n;
  }
  EXPECT_THROW(table(0), DomainError);
  EXPECT_THROW(table(5001), DomainError);
}

TEST(ValuesAgree, RealTolerance) {
  EXPECT_TRUE(reals_agree(1.0, 1.0 + 5e-10));
  EXPECT_FALSE(reals_agree(1.0, 1.0 + 5e-9));
  EXPECT_TRUE(reals_agree(1e6, 1e6 + 5e-4));
}

// --- properties ---

TEST(Properties, ReflectionIsExactOnRandomRationals) {
  constexpr std::uint64_t kLimit = 10'000;
  SeededDraws draws(7);
  const auto f = rational_fn(kLimit, [&](std::uint64_t) { return draws.rational(1000, 100); });
  const DivisorTable table(kLimit);
  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    ASSERT_EQ(divisor_sum(n, f, table), divisor_sum_reflected(n, f, table)) << n;
  }
}

TEST(Properties, PairEnumerationsAgree) {
  constexpr std::uint64_t kLimit = 200;
  const DivisorTable table(kLimit);
  SeededDraws draws(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomPairFunction f(kLimit, draws);
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
      ASSERT_EQ(triangle_sum_lhs(n, f), triangle_sum_rhs(n, f, table)) << n;
      ASSERT_EQ(divisor_pair_sum_lhs(n, f, table), divisor_pair_sum_rhs(n, f, table)) << n;
    }
  }
}

TEST(Properties, MoebiusRoundTrip) {
  constexpr std::uint64_t kLimit = 1000;
  const DivisorTable table(kLimit);
  SeededDraws draws(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = rational_fn(kLimit, [&](std::uint64_t) { return draws.rational(1000, 100); });
    const auto f = rational_fn(kLimit, [&](std::uint64_t n) { return divisor_sum(n, g, table); });
    for (std::uint64_t n = 1; n <= kLimit; ++n) ASSERT_EQ(moebius_invert(f, n), g(n)) << n;
  }
}

TEST(Properties, PartialSummationOnRandomRationals) {
  SeededDraws draws(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = static_cast<std::uint64_t>(draws.uniform(1, 50));
    const auto b = static_cast<std::uint64_t>(draws.uniform(static_cast<std::int64_t>(a), 60));
    const auto f = rational_fn(b + 2, [&](std::uint64_t) { return draws.rational(1000, 100); });
    const auto g = rational_fn(b + 2, [&](std::uint64_t) { return draws.rational(1000, 100); });
    ASSERT_EQ(partial_summation_lhs(f, g, a, b), partial_summation_rhs(f, g, a, b)) << a << ' ' << b;
  }
}

TEST(Properties, SeededDrawsAreReproducible) {
  SeededDraws a(42), b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.rational(1000, 100), b.rational(1000, 100));
  SeededDraws c(0);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.uniform(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
  }
}

}  // namespace
}  // namespace pnt
