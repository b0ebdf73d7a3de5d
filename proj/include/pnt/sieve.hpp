#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pnt/arith.hpp"
#include "pnt/summation.hpp"

namespace pnt {

// Smallest-prime-factor table over 1..limit for bulk factorization.
class SmallestPrimeFactorTable {
 public:
  explicit SmallestPrimeFactorTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  // spf(1) == 1.
  std::uint32_t spf(std::uint32_t n) const;

  Factorization factorize(std::uint32_t n) const;
  int moebius(std::uint32_t n) const;
  double mangoldt(std::uint32_t n) const;
  std::vector<std::uint64_t> divisors(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

// Primes up to limit in ascending order.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct TableOptions {
  // Largest N stored as per-n arrays; above it only checkpoints are kept.
  std::uint64_t dense_limit = 10'000'000;
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
  // Distance between stored prefix checkpoints in segmented mode.
  std::uint64_t checkpoint_stride = std::uint64_t{1} << 16;
};

inline constexpr std::uint64_t kMaxTableLimit = 100'000'000;

// One step of a streamed pass over 1..N.
struct PrefixRow {
  std::uint64_t n;
  double lambda;
  double psi;
  double theta;
  std::uint64_t pi;
};

// Prefix tables of Lambda, psi, theta and pi over 1..N.
//
// Real arguments follow the floor convention: a lookup at x reads index
// floor(x), and x < 1 is the empty sum. For N <= dense_limit every per-n
// value is stored. Above that only compensated-sum checkpoints are kept and
// lookups re-sieve the segment between the nearest checkpoint and the
// query; both modes accumulate in the same order so they agree bit for bit.
// A built table is immutable and safe for concurrent reads.
class ChebyshevTables {
 public:
  static ChebyshevTables build(std::uint64_t limit, const TableOptions& options = {});

  std::uint64_t limit() const { return limit_; }
  bool dense() const { return dense_; }

  // Bytes a build with these parameters would hold.
  static std::size_t estimated_bytes(std::uint64_t limit, const TableOptions& options);

  double lambda(std::uint64_t n) const;
  double psi_at(std::uint64_t n) const;
  double theta_at(std::uint64_t n) const;
  std::uint64_t pi_at(std::uint64_t n) const;

  double psi(double x) const;
  double theta(double x) const;
  std::uint64_t pi(double x) const;

  // Calls fn(const PrefixRow&) for n = first..last in ascending order.
  template <class Fn>
  void for_each(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    check_range(first, last);
    if (dense_) {
      for (std::uint64_t n = first; n <= last; ++n) {
        fn(PrefixRow{n, lambda_[n], psi_[n], theta_[n], pi_[n]});
      }
      return;
    }
    stream_rows(first, last, [&](const PrefixRow& row) { fn(row); });
  }

 private:
  struct Checkpoint {
    CompensatedSum psi;
    CompensatedSum theta;
    std::uint64_t pi = 0;
  };

  void check_range(std::uint64_t first, std::uint64_t last) const;
  void stream_rows(std::uint64_t first, std::uint64_t last,
                   const std::function<void(const PrefixRow&)>& sink) const;
  PrefixRow row_at(std::uint64_t n) const;
  std::uint64_t index_for(double x, const char* op) const;

  std::uint64_t limit_ = 0;
  bool dense_ = true;
  std::uint64_t stride_ = 0;
  std::vector<std::uint32_t> base_primes_;
  std::vector<double> lambda_;
  std::vector<double> psi_;
  std::vector<double> theta_;
  std::vector<std::uint32_t> pi_;
  std::vector<Checkpoint> checkpoints_;
};

ChebyshevTables build_tables(std::uint64_t limit, const TableOptions& options = {});

// Lookups with the floor convention; reject x > t.limit().
double psi(double x, const ChebyshevTables& t);
double theta(double x, const ChebyshevTables& t);
std::uint64_t pi(double x, const ChebyshevTables& t);

// R(x) = psi(x) - x for 1 <= x <= t.limit().
double r_error(double x, const ChebyshevTables& t);

// ln2/2 + ln3/3 + ln5/5 - ln30/30.
double chebyshev_B();

struct ChebyshevWindow {
  // Least x0 with B < pi(x) ln x / x < 6B/5 for every integer x in [x0, N].
  std::uint64_t x0 = 0;
  double min_ratio = 0.0;
  std::uint64_t argmin = 0;
  double max_ratio = 0.0;
  std::uint64_t argmax = 0;
};

// Requires t.limit() >= 1e5. Throws std::runtime_error if the ratio at N
// itself falls outside (B, 6B/5).
ChebyshevWindow chebyshev_window_scan(const ChebyshevTables& t);

}  // namespace pnt
