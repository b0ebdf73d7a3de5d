#include "pnt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pnt/arith.hpp"
#include "pnt/asymptotics.hpp"
#include "pnt/combinatorics.hpp"
#include "pnt/errors.hpp"
#include "pnt/random.hpp"
#include "pnt/selberg.hpp"
#include "pnt/summation.hpp"

namespace pnt {
namespace {

// Tracks an exact property over a scan: number of violations and the first.
class Mismatches {
 public:
  void record(bool ok, double x) {
    if (ok) return;
    if (count_ == 0) first_ = x;
    ++count_;
  }

  CheckRow row(std::string suite, std::string check) const {
    CheckRow r{std::move(suite), std::move(check), count_ == 0, std::nullopt, static_cast<double>(count_), 0.0};
    if (count_ > 0) r.witness_x = first_;
    return r;
  }

 private:
  std::uint64_t count_ = 0;
  double first_ = 0.0;
};

CheckRow report_row(std::string suite, std::string check, const BigOReport& report, double threshold) {
  return {std::move(suite), std::move(check), report.pass, report.witness_x, report.sup_ratio, threshold};
}

CheckRow inequality_row(std::string suite, const InequalityCheck& c) {
  return {std::move(suite), c.name, c.pass, c.witness_x, c.min_slack, 0.0};
}

std::vector<double> decade_points(std::uint64_t lo_exp, std::uint64_t hi_exp, std::uint64_t limit) {
  std::vector<double> xs;
  double x = std::pow(10.0, static_cast<double>(lo_exp));
  for (std::uint64_t e = lo_exp; e <= hi_exp && x <= static_cast<double>(limit); ++e, x *= 10) xs.push_back(x);
  return xs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"moebius",     "combinatorics", "chebyshev", "inequalities",
                                              "asymptotics", "selberg",       "iteration", "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::uint64_t> error_inequality_samples(std::uint64_t seed, std::uint64_t hi, std::size_t count) {
  if (hi < 2) throw DomainError("error_inequality_samples: upper end must be >= 2");
  SeededDraws draws(seed);
  std::vector<std::uint64_t> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) xs.push_back(static_cast<std::uint64_t>(draws.uniform(2, static_cast<std::int64_t>(hi))));
  return xs;
}

std::vector<double> selberg_lhs_bruteforce(std::uint64_t x) {
  std::vector<double> lam(x + 1, 0.0);
  for (std::uint64_t n = 1; n <= x; ++n) lam[n] = mangoldt(n);
  std::vector<double> prefix(x + 1, 0.0);
  double acc = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    double term = lam[n] * std::log(static_cast<double>(n));
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) term += lam[d] * lam[n / d];
    }
    acc += term;
    prefix[n] = acc;
  }
  return prefix;
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> verify_moebius(const VerifyOptions& options) {
  const std::string suite = "moebius";
  std::vector<CheckRow> rows;

  Mismatches eq3;
  for (std::uint64_t n = 1; n <= options.max_n; ++n) {
    eq3.record(moebius_divisor_sum(n) == (n == 1 ? 1 : 0), static_cast<double>(n));
  }
  rows.push_back(eq3.row(suite, "divisor_sum_is_unit"));

  const std::uint64_t g_limit = std::min<std::uint64_t>(1000, options.max_n);
  const DivisorTable divs(g_limit);
  SeededDraws draws(options.seed);
  Mismatches inversion;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> g(g_limit + 1, 0);
    for (std::uint64_t n = 1; n <= g_limit; ++n) g[n] = draws.uniform(-1000, 1000);
    const auto f = Tabulated<std::int64_t>::from(g_limit, [&](std::uint64_t m) {
      std::int64_t s = 0;
      for (std::uint64_t d : divs(m)) s += g[d];
      return s;
    });
    for (std::uint64_t n = 1; n <= g_limit; ++n) {
      inversion.record(moebius_invert(f, n) == g[n], static_cast<double>(n));
    }
  }
  rows.push_back(inversion.row(suite, "inversion_roundtrip"));

  Mismatches squarefree;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(10'000, options.max_n); ++n) {
    squarefree.record((moebius(n) != 0) == (radical(n) == n), static_cast<double>(n));
  }
  rows.push_back(squarefree.row(suite, "squarefree_iff_radical"));
  return rows;
}

std::vector<CheckRow> verify_combinatorics(const VerifyOptions& options) {
  const std::string suite = "combinatorics";
  std::vector<CheckRow> rows;

  {
    const std::uint64_t limit = std::min<std::uint64_t>(10'000, options.max_n);
    const DivisorTable divs(limit);
    SeededDraws draws(options.seed);
    const auto f = Tabulated<Rational>::from(limit, [&](std::uint64_t) { return draws.rational(1000, 100); });
    Mismatches reflection;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      reflection.record(divisor_sum(n, f, divs) == divisor_sum_reflected(n, f, divs), static_cast<double>(n));
    }
    rows.push_back(reflection.row(suite, "divisor_reflection"));
  }

  {
    const std::uint64_t limit = std::min<std::uint64_t>(500, options.max_n);
    const DivisorTable divs(limit);
    SeededDraws draws(options.seed);
    Mismatches triangle, pairs;
    for (int trial = 0; trial < 100; ++trial) {
      const RandomPairFunction f(limit, draws);
      for (std::uint64_t n = 1; n <= limit; ++n) {
        triangle.record(triangle_sum_lhs(n, f) == triangle_sum_rhs(n, f, divs), static_cast<double>(n));
        pairs.record(divisor_pair_sum_lhs(n, f, divs) == divisor_pair_sum_rhs(n, f, divs), static_cast<double>(n));
      }
    }
    rows.push_back(triangle.row(suite, "pair_enumeration"));
    rows.push_back(pairs.row(suite, "divisor_pair_enumeration"));
  }

  {
    SeededDraws draws(options.seed);
    Mismatches summation;
    for (int trial = 0; trial < 200; ++trial) {
      const auto b = static_cast<std::uint64_t>(draws.uniform(1, 100));
      const auto a = static_cast<std::uint64_t>(draws.uniform(1, static_cast<std::int64_t>(b)));
      const auto f = Tabulated<Rational>::from(b + 2, [&](std::uint64_t) { return draws.rational(1000, 100); });
      const auto g = Tabulated<Rational>::from(b + 2, [&](std::uint64_t) { return draws.rational(1000, 100); });
      summation.record(partial_summation_lhs(f, g, a, b) == partial_summation_rhs(f, g, a, b), static_cast<double>(b));
    }
    rows.push_back(summation.row(suite, "partial_summation"));
  }

  {
    Mismatches log_sum;
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(10'000, options.max_n); ++n) {
      double s = 0.0;
      for (std::uint64_t d : divisors(n)) s += mangoldt(d);
      log_sum.record(reals_agree(s, std::log(static_cast<double>(n))), static_cast<double>(n));
    }
    rows.push_back(log_sum.row(suite, "log_is_mangoldt_divisor_sum"));
  }
  return rows;
}

std::vector<CheckRow> verify_chebyshev(const VerifyOptions&, const ChebyshevTables& tables) {
  const std::string suite = "chebyshev";
  std::vector<CheckRow> rows;

  const double b = chebyshev_B();
  rows.push_back({suite, "B_exceeds_0.92", b > 0.92 && b < 0.9213, std::nullopt, b, 0.92});
  rows.push_back({suite, "six_fifths_B_below_1.11", 6 * b / 5 < 1.11, std::nullopt, 6 * b / 5, 1.11});

  const ChebyshevWindow window = chebyshev_window_scan(tables);
  rows.push_back({suite, "window_x0", window.x0 <= 100'000, static_cast<double>(window.x0),
                  static_cast<double>(window.x0), 100'000});

  {
    Mismatches invariants;
    double prev_psi = 0.0, prev_theta = 0.0;
    std::uint64_t prev_pi = 0;
    const std::uint64_t prime_check_limit = std::min<std::uint64_t>(100'000, tables.limit());
    tables.for_each(1, tables.limit(), [&](const PrefixRow& row) {
      bool ok = row.theta <= row.psi && row.psi >= prev_psi && row.theta >= prev_theta && row.pi >= prev_pi &&
                row.pi - prev_pi <= 1;
      if (row.n <= prime_check_limit) ok = ok && ((row.pi - prev_pi == 1) == is_prime(row.n));
      invariants.record(ok, static_cast<double>(row.n));
      prev_psi = row.psi;
      prev_theta = row.theta;
      prev_pi = row.pi;
    });
    rows.push_back(invariants.row(suite, "table_invariants"));
  }

  {
    Mismatches lambda;
    const std::uint64_t limit = std::min<std::uint64_t>(10'000, tables.limit());
    tables.for_each(1, limit, [&](const PrefixRow& row) {
      lambda.record(std::fabs(row.lambda - mangoldt(row.n)) <= 1e-12, static_cast<double>(row.n));
    });
    rows.push_back(lambda.row(suite, "lambda_matches_mangoldt"));
  }

  {
    const std::vector<double> xs = decade_points(2, 6, tables.limit());
    const auto table = pnt_ratio_table(tables, xs);
    Mismatches trend;
    for (std::size_t i = 1; i < table.size(); ++i) trend.record(table[i].pi_ratio < table[i - 1].pi_ratio, table[i].x);
    rows.push_back(trend.row(suite, "pi_ratio_decreasing_by_decade"));
    if (tables.limit() >= 1'000'000) {
      const PntRow& last = table.back();
      rows.push_back({suite, "pi_ratio_at_1e6", last.pi_ratio >= 1.083 && last.pi_ratio <= 1.086, last.x,
                      last.pi_ratio, 1.086});
      const bool window = std::min({last.pi_ratio, last.theta_ratio, last.psi_ratio}) > 0.9 &&
                          std::max({last.pi_ratio, last.theta_ratio, last.psi_ratio}) < 1.2;
      rows.push_back({suite, "ratios_at_1e6_within_0.9_1.2", window, last.x, last.theta_ratio, 1.2});
    }
  }
  return rows;
}

std::vector<CheckRow> verify_inequalities(const VerifyOptions& options) {
  std::vector<CheckRow> rows;
  for (const auto& c : elementary_inequalities(options.max_n)) rows.push_back(inequality_row("inequalities", c));
  return rows;
}

std::vector<CheckRow> verify_asymptotics(const VerifyOptions& options, std::shared_ptr<const ChebyshevTables> tables) {
  const std::string suite = "asymptotics";
  std::vector<CheckRow> rows;
  const std::uint64_t limit = tables->limit();

  for (const auto& claim : identity_catalog(tables)) {
    const SampleGrid grid{static_cast<std::uint64_t>(std::ceil(claim.threshold)), limit, true};
    rows.push_back(report_row(suite, "identity:" + claim.name, check_claim(claim, grid), claim.constant));
  }

  {
    const double est = euler_gamma_estimate(limit);
    const double err = std::fabs(est - std::numbers::egamma);
    const double bound = 1.0 / static_cast<double>(limit);
    rows.push_back({suite, "euler_gamma_estimate", err < bound, static_cast<double>(limit), err, bound});
  }

  {
    Mismatches telescoping;
    CompensatedSum s;
    double worst = 0.0;
    for (std::uint64_t x = 1; x <= limit; ++x) {
      if (x > 1) s.add(std::log1p(1.0 / static_cast<double>(x - 1)));
      const double diff = std::fabs(std::log(static_cast<double>(x)) - s.value());
      worst = std::max(worst, diff);
      telescoping.record(diff <= 1e-9, static_cast<double>(x));
    }
    CheckRow row = telescoping.row(suite, "telescoped_log");
    row.observed = worst;
    row.threshold = 1e-9;
    rows.push_back(row);
  }

  {
    Mismatches galois;
    for (std::int64_t n = -100; n <= 100; ++n) {
      for (int k = -100; k <= 100; ++k) {
        const double x = k / 10.0;
        galois.record(floor_galois_check(n, x), x);
        if (n >= 0 && x >= 0) galois.record((static_cast<std::uint64_t>(n) <= natfloor(x)) == (n <= x), x);
      }
    }
    rows.push_back(galois.row(suite, "floor_galois_correspondence"));
  }

  {
    SeededDraws draws(options.seed);
    Mismatches shift;
    for (int i = 0; i < 1000; ++i) {
      const double z = 1.0 + static_cast<double>(draws.uniform(0, 999'999'000'000)) / 1e6;
      shift.record(natfloor_shift_check(z), z);
    }
    rows.push_back(shift.row(suite, "natfloor_shift"));
  }
  return rows;
}

std::vector<CheckRow> verify_selberg(const VerifyOptions& options, const ChebyshevTables& tables) {
  const std::string suite = "selberg";
  std::vector<CheckRow> rows;
  if (tables.limit() < 2) throw DomainError("selberg suite needs max_n >= 2");

  const std::uint64_t symmetry_limit = std::min<std::uint64_t>(100'000, tables.limit());
  rows.push_back(report_row(suite, "symmetry_formula", selberg_check(tables, SampleGrid{2, symmetry_limit, false}),
                            kSelbergConstant));

  {
    const std::uint64_t limit = std::min<std::uint64_t>(1000, tables.limit());
    const SelbergSums sums(tables, limit);
    const std::vector<double> oracle = selberg_lhs_bruteforce(limit);
    Mismatches agree;
    for (std::uint64_t x = 1; x <= limit; ++x) {
      agree.record(std::fabs(sums.lhs(static_cast<double>(x)) - oracle[x]) <= 1e-9, static_cast<double>(x));
    }
    rows.push_back(agree.row(suite, "bruteforce_agreement"));
  }

  {
    const std::uint64_t hi = std::min<std::uint64_t>(10'000, tables.limit());
    const auto xs = error_inequality_samples(options.seed, hi);
    rows.push_back(report_row(suite, "error_inequality", r_inequality_check(tables, xs), kErrorInequalityConstant));
  }
  return rows;
}

std::vector<CheckRow> verify_iteration(const VerifyOptions&) {
  const std::string suite = "iteration";
  constexpr double a1 = 0.5;
  constexpr double k = 0.1;
  const IterationTrace trace = iterate_bound(a1, k, 2000);
  Mismatches positive, decreasing, envelope;
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    positive.record(trace.values[i] > 0.0, n);
    if (i > 0) decreasing.record(trace.values[i] < trace.values[i - 1], n);
    envelope.record(trace.values[i] <= iteration_envelope(a1, k, i + 1), n);
  }
  const double last = trace.values.back();
  return {positive.row(suite, "positive"), decreasing.row(suite, "strictly_decreasing"),
          envelope.row(suite, "below_envelope"),
          CheckRow{suite, "a_2000_below_0.05", last < 0.05, 2000.0, last, 0.05}};
}

std::vector<CheckRow> run_suite(std::string_view name, const VerifyOptions& options,
                                std::shared_ptr<const ChebyshevTables> tables) {
  if (!is_suite(name)) throw DomainError("unknown suite: " + std::string(name));
  auto need_tables = [&]() -> const ChebyshevTables& {
    if (!tables || tables->limit() < options.max_n) throw DomainError("run_suite: tables must cover max_n");
    return *tables;
  };
  const bool all = name == "all";
  std::vector<CheckRow> rows;
  auto append = [&rows](std::vector<CheckRow> more) {
    rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (all || name == "moebius") append(verify_moebius(options));
  if (all || name == "combinatorics") append(verify_combinatorics(options));
  if (all || name == "chebyshev") append(verify_chebyshev(options, need_tables()));
  if (all || name == "inequalities") append(verify_inequalities(options));
  if (all || name == "asymptotics") {
    need_tables();
    append(verify_asymptotics(options, tables));
  }
  if (all || name == "selberg") append(verify_selberg(options, need_tables()));
  if (all || name == "iteration") append(verify_iteration(options));
  return rows;
}

}  // namespace pnt
