#include "pnt/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pnt/errors.hpp"

namespace pnt {
namespace {

constexpr std::uint64_t kSegmentLength = std::uint64_t{1} << 16;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieves [lo, hi) and writes Lambda and primality for each n = lo + i.
class SegmentSieve {
 public:
  explicit SegmentSieve(std::span<const std::uint32_t> base_primes) : base_primes_(base_primes) {}

  void run(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t len = hi - lo;
    composite_.assign(len, 0);
    lambda_.assign(len, 0.0);
    prime_.assign(len, 0);
    for (std::uint64_t p : base_primes_) {
      if (p * p >= hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m < hi; m += p) composite_[m - lo] = 1;
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t n = lo + i;
      if (n >= 2 && !composite_[i]) {
        prime_[i] = 1;
        lambda_[i] = std::log(static_cast<double>(n));
      }
    }
    // Proper prime powers p^a, a >= 2, all have p <= sqrt(hi - 1).
    for (std::uint64_t p : base_primes_) {
      if (p * p >= hi) break;
      const double lp = std::log(static_cast<double>(p));
      for (std::uint64_t pk = p * p; pk < hi; pk *= p) {
        if (pk >= lo) lambda_[pk - lo] = lp;
        if (pk > (hi - 1) / p) break;
      }
    }
  }

  double lambda(std::uint64_t i) const { return lambda_[i]; }
  bool prime(std::uint64_t i) const { return prime_[i] != 0; }

 private:
  std::span<const std::uint32_t> base_primes_;
  std::vector<std::uint8_t> composite_;
  std::vector<std::uint8_t> prime_;
  std::vector<double> lambda_;
};

// Accumulates n = after + 1 .. last starting from `state` (the prefix state
// at n = after), handing every row to emit.
template <class State, class Emit>
void sweep(std::span<const std::uint32_t> base_primes, std::uint64_t after, State state, std::uint64_t last,
           Emit&& emit) {
  SegmentSieve sieve(base_primes);
  for (std::uint64_t lo = after + 1; lo <= last; lo += kSegmentLength) {
    const std::uint64_t hi = std::min(last + 1, lo + kSegmentLength);
    sieve.run(lo, hi);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double lam = sieve.lambda(n - lo);
      state.psi.add(lam);
      if (sieve.prime(n - lo)) {
        state.theta.add(lam);
        ++state.pi;
      }
      emit(n, lam, state);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SmallestPrimeFactorTable

SmallestPrimeFactorTable::SmallestPrimeFactorTable(std::uint32_t limit) : limit_(limit), spf_(limit + 1u, 0) {
  if (limit == 0) throw DomainError("SmallestPrimeFactorTable: limit must be positive");
  spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t m = i * i; m <= limit; m += i) {
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t SmallestPrimeFactorTable::spf(std::uint32_t n) const {
  if (n == 0 || n > limit_) {
    throw DomainError("SmallestPrimeFactorTable: " + std::to_string(n) + " outside 1.." + std::to_string(limit_));
  }
  return spf_[n];
}

Factorization SmallestPrimeFactorTable::factorize(std::uint32_t n) const {
  spf(n);
  std::vector<PrimePower> pairs;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  return Factorization(std::move(pairs));
}

int SmallestPrimeFactorTable::moebius(std::uint32_t n) const {
  spf(n);
  int sign = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

double SmallestPrimeFactorTable::mangoldt(std::uint32_t n) const {
  spf(n);
  if (n == 1) return 0.0;
  const std::uint32_t p = spf_[n];
  std::uint32_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<std::uint64_t> SmallestPrimeFactorTable::divisors(std::uint32_t n) const {
  return pnt::divisors(factorize(n));
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(limit + 1u, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = 1;
  }
  return primes;
}

// ---------------------------------------------------------------------------
// ChebyshevTables

std::size_t ChebyshevTables::estimated_bytes(std::uint64_t limit, const TableOptions& options) {
  const std::size_t base = (isqrt(limit) + 1) * sizeof(std::uint32_t);
  if (limit <= options.dense_limit) {
    return base + (limit + 1) * (3 * sizeof(double) + sizeof(std::uint32_t));
  }
  const std::uint64_t stride = std::max<std::uint64_t>(options.checkpoint_stride, 1);
  return base + (limit / stride + 1) * sizeof(Checkpoint) +
         kSegmentLength * (sizeof(double) + 2 * sizeof(std::uint8_t));
}

ChebyshevTables ChebyshevTables::build(std::uint64_t limit, const TableOptions& options) {
  if (limit == 0 || limit > kMaxTableLimit) {
    throw DomainError("build_tables: limit must be in 1.." + std::to_string(kMaxTableLimit) + ", got " +
                      std::to_string(limit));
  }
  const std::size_t bytes = estimated_bytes(limit, options);
  if (bytes > options.memory_budget_bytes) {
    throw ResourceExhausted("build_tables: N=" + std::to_string(limit) + " needs ~" + std::to_string(bytes) +
                            " bytes, budget is " + std::to_string(options.memory_budget_bytes));
  }

  ChebyshevTables t;
  t.limit_ = limit;
  t.dense_ = limit <= options.dense_limit;
  t.stride_ = std::max<std::uint64_t>(options.checkpoint_stride, 1);
  t.base_primes_ = primes_up_to(static_cast<std::uint32_t>(isqrt(limit)));

  if (t.dense_) {
    t.lambda_.assign(limit + 1, 0.0);
    t.psi_.assign(limit + 1, 0.0);
    t.theta_.assign(limit + 1, 0.0);
    t.pi_.assign(limit + 1, 0);
    sweep(t.base_primes_, 0, Checkpoint{}, limit, [&](std::uint64_t n, double lam, const Checkpoint& s) {
      t.lambda_[n] = lam;
      t.psi_[n] = s.psi.value();
      t.theta_[n] = s.theta.value();
      t.pi_[n] = static_cast<std::uint32_t>(s.pi);
    });
  } else {
    t.checkpoints_.reserve(limit / t.stride_ + 1);
    t.checkpoints_.push_back(Checkpoint{});
    sweep(t.base_primes_, 0, Checkpoint{}, limit, [&](std::uint64_t n, double, const Checkpoint& s) {
      if (n % t.stride_ == 0) t.checkpoints_.push_back(s);
    });
  }
  return t;
}

void ChebyshevTables::check_range(std::uint64_t first, std::uint64_t last) const {
  if (first == 0 || first > last || last > limit_) {
    throw DomainError("ChebyshevTables: range [" + std::to_string(first) + ", " + std::to_string(last) +
                      "] not within 1.." + std::to_string(limit_));
  }
}

void ChebyshevTables::stream_rows(std::uint64_t first, std::uint64_t last,
                                  const std::function<void(const PrefixRow&)>& sink) const {
  const std::uint64_t k = (first - 1) / stride_;
  sweep(base_primes_, k * stride_, checkpoints_[k], last, [&](std::uint64_t n, double lam, const Checkpoint& s) {
    if (n >= first) sink(PrefixRow{n, lam, s.psi.value(), s.theta.value(), s.pi});
  });
}

PrefixRow ChebyshevTables::row_at(std::uint64_t n) const {
  PrefixRow out{};
  for_each(n, n, [&](const PrefixRow& row) { out = row; });
  return out;
}

double ChebyshevTables::lambda(std::uint64_t n) const { return row_at(n).lambda; }

double ChebyshevTables::psi_at(std::uint64_t n) const { return n == 0 ? 0.0 : row_at(n).psi; }

double ChebyshevTables::theta_at(std::uint64_t n) const { return n == 0 ? 0.0 : row_at(n).theta; }

std::uint64_t ChebyshevTables::pi_at(std::uint64_t n) const { return n == 0 ? 0 : row_at(n).pi; }

std::uint64_t ChebyshevTables::index_for(double x, const char* op) const {
  if (std::isnan(x) || x > static_cast<double>(limit_)) {
    throw DomainError(std::string(op) + ": x=" + std::to_string(x) + " exceeds table limit " +
                      std::to_string(limit_));
  }
  return x < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(x));
}

double ChebyshevTables::psi(double x) const { return psi_at(index_for(x, "psi")); }

double ChebyshevTables::theta(double x) const { return theta_at(index_for(x, "theta")); }

std::uint64_t ChebyshevTables::pi(double x) const { return pi_at(index_for(x, "pi")); }

ChebyshevTables build_tables(std::uint64_t limit, const TableOptions& options) {
  return ChebyshevTables::build(limit, options);
}

double psi(double x, const ChebyshevTables& t) { return t.psi(x); }

double theta(double x, const ChebyshevTables& t) { return t.theta(x); }

std::uint64_t pi(double x, const ChebyshevTables& t) { return t.pi(x); }

double r_error(double x, const ChebyshevTables& t) {
  if (!(x >= 1.0)) throw DomainError("r_error: x must be >= 1, got " + std::to_string(x));
  return t.psi(x) - x;
}

double chebyshev_B() {
  return std::log(2.0) / 2 + std::log(3.0) / 3 + std::log(5.0) / 5 - std::log(30.0) / 30;
}

ChebyshevWindow chebyshev_window_scan(const ChebyshevTables& t) {
  if (t.limit() < 100'000) {
    throw DomainError("chebyshev_window_scan: table limit must be >= 100000, got " + std::to_string(t.limit()));
  }
  const double lower = chebyshev_B();
  const double upper = 6 * lower / 5;
  std::uint64_t last_fail = 0;
  ChebyshevWindow w;
  t.for_each(1, t.limit(), [&](const PrefixRow& row) {
    const double x = static_cast<double>(row.n);
    const double ratio = static_cast<double>(row.pi) * std::log(x) / x;
    if (!(lower < ratio && ratio < upper)) {
      last_fail = row.n;
      return;
    }
    if (w.argmin <= last_fail || ratio < w.min_ratio) {
      w.min_ratio = ratio;
      w.argmin = row.n;
    }
    if (w.argmax <= last_fail || ratio > w.max_ratio) {
      w.max_ratio = ratio;
      w.argmax = row.n;
    }
  });
  if (last_fail == t.limit()) {
    throw std::runtime_error("chebyshev_window_scan: pi(x) ln x / x lies outside (B, 6B/5) at x = N = " +
                             std::to_string(t.limit()));
  }
  w.x0 = last_fail + 1;
  return w;
}

}  // namespace pnt
