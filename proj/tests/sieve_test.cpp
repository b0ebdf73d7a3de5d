#include "pnt/sieve.hpp"

#include <cmath>
#include <cstring>
#include <thread>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pnt/errors.hpp"

namespace pnt {
namespace {

using ::pnt::testing::naive_is_prime;
using ::pnt::testing::naive_mangoldt;

const ChebyshevTables& million() {
  static const ChebyshevTables t = build_tables(1'000'000);
  return t;
}

TEST(BuildTables, SmallestTable) {
  const auto t = build_tables(1);
  EXPECT_EQ(t.pi_at(1), 0u);
  EXPECT_EQ(t.psi_at(1), 0.0);
  EXPECT_EQ(t.theta_at(1), 0.0);
}

TEST(BuildTables, UpToTen) {
  const auto t = build_tables(10);
  EXPECT_EQ(t.pi_at(10), 4u);
  const double expected_psi = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  EXPECT_NEAR(t.psi_at(10), expected_psi, 1e-12);
  EXPECT_NEAR(t.psi_at(10), 7.832014181, 1e-9);
  EXPECT_NEAR(t.theta_at(10), std::log(210.0), 1e-12);
  EXPECT_NEAR(t.theta_at(10), 5.347107531, 1e-9);
}

TEST(BuildTables, PiMatchesNaiveScan) {
  const auto t = build_tables(20'000);
  EXPECT_EQ(t.pi_at(100), 25u);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    count += naive_is_prime(n);
    ASSERT_EQ(t.pi_at(n), count) << "n=" << n;
  }
}

TEST(BuildTables, RejectsOutOfRangeLimits) {
  EXPECT_THROW(build_tables(0), DomainError);
  EXPECT_THROW(build_tables(kMaxTableLimit + 1), DomainError);
}

TEST(BuildTables, ReportsResourceExhaustion) {
  TableOptions tight;
  tight.memory_budget_bytes = 1 << 20;
  EXPECT_THROW(build_tables(1'000'000, tight), ResourceExhausted);
  EXPECT_NO_THROW(build_tables(10'000, tight));
}

TEST(Lookup, FloorConvention) {
  const auto t = build_tables(100);
  EXPECT_EQ(psi(10.5, t), psi(10, t));
  EXPECT_EQ(pi(0.5, t), 0u);
  EXPECT_EQ(psi(-3.0, t), 0.0);
  EXPECT_NEAR(theta(10, t), 5.347108, 1e-6);
  EXPECT_EQ(pi(99.999, t), pi(99, t));
  EXPECT_EQ(pi(100.0, t), 25u);
}

TEST(Lookup, RejectsBeyondLimit) {
  const auto t = build_tables(100);
  EXPECT_THROW(psi(100.5, t), DomainError);
  EXPECT_THROW(theta(101, t), DomainError);
  EXPECT_THROW(pi(std::nan(""), t), DomainError);
  EXPECT_THROW(t.lambda(0), DomainError);
  EXPECT_THROW(t.lambda(101), DomainError);
}

TEST(RError, Examples) {
  const auto t = build_tables(100);
  EXPECT_EQ(r_error(1, t), -1.0);
  EXPECT_NEAR(r_error(10, t), -2.167985, 1e-6);
  EXPECT_NEAR(r_error(2, t), std::log(2.0) - 2, 1e-15);
  EXPECT_NEAR(r_error(2, t), -1.306853, 1e-6);
  EXPECT_THROW(r_error(0.5, t), DomainError);
  EXPECT_THROW(r_error(101, t), DomainError);
}

TEST(ChebyshevB, Value) {
  const double b = chebyshev_B();
  EXPECT_NEAR(b, 0.921292022934, 1e-12);
  EXPECT_GT(b, 0.92);
  EXPECT_LT(6 * b / 5, 1.11);
}

TEST(WindowScan, RatiosAtSamplePoints) {
  const auto& t = million();
  const double b = chebyshev_B();
  const auto ratio = [&](double x) { return static_cast<double>(t.pi(x)) * std::log(x) / x; };
  EXPECT_NEAR(ratio(1e6), 78498 * std::log(1e6) / 1e6, 1e-15);
  EXPECT_NEAR(ratio(1e6), 1.0845, 1e-4);
  EXPECT_NEAR(ratio(20), 8 * std::log(20.0) / 20, 1e-15);
  EXPECT_GT(ratio(20), 6 * b / 5);
  EXPECT_NEAR(ratio(2), 0.3466, 1e-4);
  EXPECT_LT(ratio(2), b);
}

TEST(WindowScan, DiscoversThresholdAtOneMillion) {
  // Regression values from tests/oracles/pinned_values.py.
  const ChebyshevWindow w = chebyshev_window_scan(million());
  EXPECT_EQ(w.x0, 96098u);
  EXPECT_NEAR(w.min_ratio, 1.084422374846, 1e-11);
  EXPECT_NEAR(w.max_ratio, 1.105549816140, 1e-11);
  EXPECT_GT(w.min_ratio, chebyshev_B());
  EXPECT_LT(w.max_ratio, 6 * chebyshev_B() / 5);
  EXPECT_GE(w.argmin, w.x0);
  EXPECT_GE(w.argmax, w.x0);
}

TEST(WindowScan, NeedsLargeEnoughTable) {
  EXPECT_THROW(chebyshev_window_scan(build_tables(99'999)), DomainError);
}

TEST(WindowScan, AcceptsSmallestAllowedTable) {
  const auto w = chebyshev_window_scan(build_tables(100'000));
  EXPECT_LE(w.x0, 100'000u);
  EXPECT_GT(w.min_ratio, chebyshev_B());
}

// --- invariants ---

TEST(TableInvariants, LambdaAgreesWithArithMangoldt) {
  const auto& t = million();
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    EXPECT_NEAR(t.lambda(n), mangoldt(n), 1e-12) << "n=" << n;
    EXPECT_NEAR(t.lambda(n), naive_mangoldt(n), 1e-12) << "n=" << n;
  }
}

TEST(TableInvariants, MonotoneAndThetaBelowPsi) {
  const auto& t = million();
  PrefixRow prev{0, 0, 0, 0, 0};
  double prefix = 0.0;
  t.for_each(1, t.limit(), [&](const PrefixRow& row) {
    ASSERT_LE(row.theta, row.psi);
    ASSERT_GE(row.psi, prev.psi);
    ASSERT_GE(row.theta, prev.theta);
    ASSERT_GE(row.pi, prev.pi);
    prefix += row.lambda;
    ASSERT_NEAR(row.psi, prefix, 1e-8 * prefix + 1e-12);
    prev = row;
  });
}

TEST(TableInvariants, PsiMinusThetaIsProperPrimePowerMass) {
  const auto& t = million();
  double proper = 0.0;
  for (std::uint64_t p = 2; p * p <= t.limit(); ++p) {
    if (!naive_is_prime(p)) continue;
    for (std::uint64_t q = p * p; q <= t.limit(); q *= p) proper += std::log(static_cast<double>(p));
  }
  EXPECT_GE(t.psi_at(t.limit()) - t.theta_at(t.limit()), 0.0);
  EXPECT_NEAR(t.psi_at(t.limit()) - t.theta_at(t.limit()), proper, 1e-7);
}

TEST(TableInvariants, DeterministicBuilds) {
  const auto a = build_tables(200'000);
  const auto b = build_tables(200'000);
  bool identical = true;
  a.for_each(1, a.limit(), [&](const PrefixRow& row) {
    const PrefixRow other{row.n, b.lambda(row.n), b.psi_at(row.n), b.theta_at(row.n), b.pi_at(row.n)};
    identical = identical && std::memcmp(&row.lambda, &other.lambda, sizeof(double)) == 0 &&
                std::memcmp(&row.psi, &other.psi, sizeof(double)) == 0 &&
                std::memcmp(&row.theta, &other.theta, sizeof(double)) == 0 && row.pi == other.pi;
  });
  EXPECT_TRUE(identical);
}

TEST(SegmentedMode, AgreesBitwiseWithDenseMode) {
  TableOptions segmented;
  segmented.dense_limit = 0;
  segmented.checkpoint_stride = 1000;
  const auto dense = build_tables(300'000);
  const auto seg = build_tables(300'000, segmented);
  ASSERT_TRUE(dense.dense());
  ASSERT_FALSE(seg.dense());

  std::vector<PrefixRow> streamed;
  seg.for_each(1, seg.limit(), [&](const PrefixRow& row) { streamed.push_back(row); });
  ASSERT_EQ(streamed.size(), seg.limit());
  dense.for_each(1, dense.limit(), [&](const PrefixRow& row) {
    const PrefixRow& s = streamed[row.n - 1];
    ASSERT_EQ(s.n, row.n);
    ASSERT_EQ(s.lambda, row.lambda);
    ASSERT_EQ(s.psi, row.psi);
    ASSERT_EQ(s.theta, row.theta);
    ASSERT_EQ(s.pi, row.pi);
  });
  for (double x : {1.0, 999.0, 1000.0, 1000.5, 1001.0, 123'456.7, 300'000.0}) {
    EXPECT_EQ(seg.psi(x), dense.psi(x)) << x;
    EXPECT_EQ(seg.theta(x), dense.theta(x)) << x;
    EXPECT_EQ(seg.pi(x), dense.pi(x)) << x;
  }
  EXPECT_EQ(chebyshev_window_scan(seg).x0, chebyshev_window_scan(dense).x0);
}

TEST(SegmentedMode, ConcurrentReads) {
  TableOptions segmented;
  segmented.dense_limit = 0;
  const auto t = build_tables(2'000'000, segmented);
  std::vector<std::uint64_t> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] { results[i] = t.pi(1'000'000.0 + 0.25 * static_cast<double>(i)); });
  }
  for (auto& th : threads) th.join();
  for (auto r : results) EXPECT_EQ(r, 78498u);
}

TEST(SegmentedMode, HundredMillion) {
  const auto t = build_tables(kMaxTableLimit);
  EXPECT_FALSE(t.dense());
  EXPECT_EQ(t.pi(1e7), 664579u);
  EXPECT_EQ(t.pi(1e8), 5761455u);
  EXPECT_NEAR(t.psi(1e8) / 1e8, 1.0, 1e-3);
}

TEST(SmallestPrimeFactor, AgreesWithTrialDivision) {
  const SmallestPrimeFactorTable spf(100'000);
  for (std::uint32_t n = 1; n <= 100'000; ++n) {
    ASSERT_EQ(spf.factorize(n), factorize(n)) << n;
    ASSERT_EQ(spf.moebius(n), moebius(n)) << n;
    ASSERT_EQ(spf.mangoldt(n), mangoldt(n)) << n;
  }
  EXPECT_EQ(spf.divisors(360), divisors(360));
  EXPECT_THROW(spf.spf(0), DomainError);
  EXPECT_THROW(spf.spf(100'001), DomainError);
}

TEST(PrimesUpTo, Small) {
  EXPECT_EQ(primes_up_to(1), std::vector<std::uint32_t>{});
  EXPECT_EQ(primes_up_to(30), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

}  // namespace
}  // namespace pnt
