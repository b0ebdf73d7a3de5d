#include "pnt/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pnt/errors.hpp"
#include "pnt/summation.hpp"

namespace pnt {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(const SampleGrid& grid, const char* op) {
  if (grid.hi < grid.lo) {
    throw DomainError(std::string(op) + ": empty grid [" + std::to_string(grid.lo) + ", " +
                      std::to_string(grid.hi) + "]");
  }
}

// Partial sums over n <= N used by the catalog claims.
struct PartialSums {
  std::vector<double> harmonic;      // sum 1/n
  std::vector<double> log_sum;       // sum ln n
  std::vector<double> log_over_n;    // sum ln n / n
  std::vector<double> mertens;       // sum Lambda(n) / n

  explicit PartialSums(const ChebyshevTables& t) {
    const std::uint64_t limit = t.limit();
    for (auto* v : {&harmonic, &log_sum, &log_over_n, &mertens}) {
      v->reserve(limit + 1);
      v->push_back(0.0);
    }
    CompensatedSum h, l, ln, m;
    t.for_each(1, limit, [&](const PrefixRow& row) {
      const double n = static_cast<double>(row.n);
      const double log_n = std::log(n);
      h.add(1.0 / n);
      l.add(log_n);
      ln.add(log_n / n);
      m.add(row.lambda / n);
      harmonic.push_back(h.value());
      log_sum.push_back(l.value());
      log_over_n.push_back(ln.value());
      mertens.push_back(m.value());
    });
  }

  // Sum up to floor(x); NaN outside the tabulated range.
  static double at(const std::vector<double>& v, double x) {
    const std::uint64_t n = natfloor(x);
    return n < v.size() ? v[n] : kNaN;
  }
};

}  // namespace

std::vector<double> grid_points(const SampleGrid& grid, DomainKind domain, double threshold) {
  require_grid(grid, "grid_points");
  const bool midpoints = grid.include_midpoints && domain == DomainKind::reals;
  std::vector<double> points;
  points.reserve((grid.hi - grid.lo + 1) * (midpoints ? 2 : 1));
  for (std::uint64_t n = grid.lo; n <= grid.hi; ++n) {
    const double x = static_cast<double>(n);
    if (x >= threshold) points.push_back(x);
    if (midpoints && n < grid.hi && x + 0.5 >= threshold) points.push_back(x + 0.5);
  }
  return points;
}

BigOReport check_claim(const BigOClaim& claim, const SampleGrid& grid) {
  const std::vector<double> points = grid_points(grid, claim.domain, claim.threshold);
  if (points.empty()) {
    throw DomainError("check_claim: no grid point of [" + std::to_string(grid.lo) + ", " + std::to_string(grid.hi) +
                      "] lies at or above the threshold of " + claim.name);
  }
  BigOReport report;
  report.sup_ratio = -kInf;
  for (double x : points) {
    const double lhs = claim.lhs(x);
    const double main = claim.main(x);
    const double bound = claim.bound(x);
    double ratio;
    if (!std::isfinite(lhs) || !std::isfinite(main) || !std::isfinite(bound)) {
      ratio = kInf;
    } else if (bound == 0.0) {
      ratio = lhs == main ? 0.0 : kInf;
    } else {
      ratio = std::fabs(lhs - main) / std::fabs(bound);
    }
    ++report.points_checked;
    if (ratio > report.sup_ratio) {
      report.sup_ratio = ratio;
      report.witness_x = x;
    }
  }
  report.pass = report.sup_ratio <= claim.constant;
  return report;
}

ConstantEstimate estimate_constant(const RealFunction& f, const RealFunction& g, const SampleGrid& grid) {
  const std::vector<double> points = grid_points(grid, DomainKind::reals);
  ConstantEstimate est;
  est.constant = -kInf;
  for (double x : points) {
    const double denom = g(x);
    if (denom == 0.0) throw DomainError("estimate_constant: g vanishes at x=" + std::to_string(x));
    const double ratio = std::fabs(f(x)) / std::fabs(denom);
    if (ratio > est.constant || std::isnan(ratio)) {
      est.constant = std::isnan(ratio) ? kInf : ratio;
      est.witness_x = x;
      if (std::isnan(ratio)) break;
    }
  }
  return est;
}

std::vector<BigOClaim> identity_catalog(std::shared_ptr<const ChebyshevTables> tables) {
  if (!tables) throw DomainError("identity_catalog: tables required");
  auto sums = std::make_shared<const PartialSums>(*tables);
  const auto one = [](double) { return 1.0; };

  std::vector<BigOClaim> claims;
  claims.push_back({std::string(kLn1pRecip), [](double n) { return std::log1p(1.0 / n); },
                    [](double n) { return 1.0 / n; }, [](double n) { return 1.0 / (n * n); }, 1.0, 2.0,
                    DomainKind::integers});
  claims.push_back({std::string(kHarmonicLog), [sums](double x) { return PartialSums::at(sums->harmonic, x); },
                    [](double x) { return std::log(x); }, one, 1.0, 1.0, DomainKind::reals});
  claims.push_back({std::string(kStirlingLogSum), [sums](double x) { return PartialSums::at(sums->log_sum, x); },
                    [](double x) { return x * std::log(x) - x; }, [](double x) { return std::log(x); }, 3.0, 2.0,
                    DomainKind::reals});
  claims.push_back({std::string(kLogOverN), [sums](double x) { return PartialSums::at(sums->log_over_n, x); },
                    [](double x) {
                      const double l = std::log(x);
                      return l * l / 2;
                    },
                    one, 1.0, 1.0, DomainKind::reals});
  claims.push_back({std::string(kMertens), [sums](double x) { return PartialSums::at(sums->mertens, x); },
                    [](double x) { return std::log(x); }, one, 1.5, 1.0, DomainKind::reals});
  claims.push_back({std::string(kEulerGamma), [sums](double x) { return PartialSums::at(sums->harmonic, x); },
                    [](double x) { return std::log(x) + std::numbers::egamma; }, [](double x) { return 1.0 / x; },
                    1.0, 1.0, DomainKind::reals});
  return claims;
}

std::vector<std::string> identity_names() {
  return {std::string(kLn1pRecip), std::string(kHarmonicLog), std::string(kStirlingLogSum),
          std::string(kLogOverN),  std::string(kMertens),     std::string(kEulerGamma)};
}

std::optional<BigOClaim> find_identity(std::shared_ptr<const ChebyshevTables> tables, std::string_view name) {
  const auto names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) return std::nullopt;
  for (auto& claim : identity_catalog(std::move(tables))) {
    if (claim.name == name) return std::move(claim);
  }
  return std::nullopt;
}

std::vector<InequalityCheck> elementary_inequalities(std::uint64_t basel_terms) {
  std::vector<InequalityCheck> out;
  auto record = [](InequalityCheck& c, double x, double slack) {
    ++c.points_checked;
    if (slack < c.min_slack || std::isnan(slack)) {
      c.min_slack = std::isnan(slack) ? -kInf : slack;
      c.witness_x = x;
    }
  };
  // Points i / 1000 for i in [first, last].
  auto scan = [&](std::string name, int first, int last, auto slack_at) {
    InequalityCheck c;
    c.name = std::move(name);
    for (int i = first; i <= last; ++i) {
      const double x = i / 1000.0;
      record(c, x, slack_at(x));
    }
    c.pass = c.min_slack >= 0.0;
    return c;
  };

  // e^x >= 1 + x for x >= 0.
  out.push_back(scan("exp_lower", 0, 10'000, [](double x) { return std::expm1(x) - x; }));
  // e^x <= 1 + x + x^2 on [0, 1/2].
  out.push_back(scan("exp_upper", 0, 500, [](double x) { return x + x * x - std::expm1(x); }));
  // x - x^2 <= ln(1 + x) <= x on [0, 1/2].
  out.push_back(scan("ln1p_bounds", 0, 500, [](double x) {
    const double l = std::log1p(x);
    return std::min(l - (x - x * x), x - l);
  }));

  // sum_{n<=M} 1/n^2 <= 1 + sum_{n=2}^{M} (1/(n-1) - 1/n) = 2 - 1/M <= 2.
  {
    InequalityCheck c;
    c.name = "basel_telescoping";
    CompensatedSum s;
    for (std::uint64_t m = 1; m <= basel_terms; ++m) {
      const double md = static_cast<double>(m);
      s.add(1.0 / (md * md));
      record(c, md, (2.0 - 1.0 / md) - s.value());
    }
    c.pass = c.min_slack >= 0.0;
    out.push_back(std::move(c));
  }

  // ln x / x^a <= 2 / (a x^(a/2)) for x > 0, a > 0.
  {
    InequalityCheck c;
    c.name = "log_power_decay";
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
      for (int i = 1; i <= 100'000; ++i) {
        const double x = i / 1000.0;
        record(c, x, 2.0 / (a * std::pow(x, a / 2)) - std::log(x) / std::pow(x, a));
      }
    }
    c.pass = c.min_slack >= 0.0;
    out.push_back(std::move(c));
  }
  return out;
}

double euler_gamma_estimate(std::uint64_t n) {
  if (n < 10) throw DomainError("euler_gamma_estimate: N must be >= 10, got " + std::to_string(n));
  CompensatedSum h;
  for (std::uint64_t k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
  return h.value() - std::log(static_cast<double>(n));
}

double telescoped_log(std::uint64_t x) {
  if (x == 0) throw DomainError("telescoped_log: x must be positive");
  CompensatedSum s;
  for (std::uint64_t n = 1; n + 1 <= x; ++n) s.add(std::log1p(1.0 / static_cast<double>(n)));
  return s.value();
}

std::uint64_t natfloor(double x) {
  if (std::isnan(x) || x < 1.0) return 0;
  if (x >= 18446744073709551616.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::floor(x));
}

bool floor_galois_check(std::int64_t n, double x) {
  if (std::isnan(x)) throw DomainError("floor_galois_check: x is NaN");
  const double fx = std::floor(x);
  bool left;
  if (fx >= 9223372036854775808.0) {
    left = true;
  } else if (fx < -9223372036854775808.0) {
    left = false;
  } else {
    left = n <= static_cast<std::int64_t>(fx);
  }
  const bool right = static_cast<long double>(n) <= static_cast<long double>(x);
  return left == right;
}

bool natfloor_shift_check(double z) {
  if (!(z >= 1.0)) throw DomainError("natfloor_shift_check: z must be >= 1, got " + std::to_string(z));
  return natfloor(std::fabs(z - 1.0)) + 1 == natfloor(z);
}

}  // namespace pnt
