#include "pnt/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pnt/errors.hpp"

namespace pnt {
namespace {

__extension__ typedef unsigned __int128 u128;

void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) {
    throw DomainError(std::string(op) + ": argument must be a positive integer");
  }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a, for odd n > 2.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  std::uint64_t previous = 0;
  for (const auto& pp : pairs_) {
    if (pp.multiplicity == 0) throw DomainError("Factorization: multiplicity must be >= 1");
    if (pp.prime <= previous) throw DomainError("Factorization: primes must be strictly increasing");
    if (!is_prime(pp.prime)) throw DomainError("Factorization: " + std::to_string(pp.prime) + " is not prime");
    previous = pp.prime;
  }
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, j] : pairs_) {
    for (unsigned i = 0; i < j; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / p) {
        throw DomainError("Factorization: product overflows 64 bits");
      }
      n *= p;
    }
  }
  return n;
}

bool Factorization::squarefree() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const PrimePower& pp) { return pp.multiplicity == 1; });
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p,
                             [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  return (it != pairs_.end() && it->prime == p) ? it->multiplicity : 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  // The first twelve primes are a deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> pairs;
  auto divide_out = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) pairs.push_back({p, e});
  };
  divide_out(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) divide_out(p);
  if (n > 1) pairs.push_back({n, 1});
  return Factorization(std::move(pairs));
}

unsigned multiplicity(std::uint64_t p, std::uint64_t n) {
  require_positive(n, "multiplicity");
  if (!is_prime(p)) throw DomainError("multiplicity: " + std::to_string(p) + " is not prime");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t radical(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& pp : f.pairs()) r *= pp.prime;
  return r;
}

std::uint64_t radical(std::uint64_t n) {
  require_positive(n, "radical");
  return radical(factorize(n));
}

int moebius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  return moebius(factorize(n));
}

double mangoldt(const Factorization& f) {
  if (f.size() != 1) return 0.0;
  return std::log(static_cast<double>(f.pairs().front().prime));
}

double mangoldt(std::uint64_t n) {
  require_positive(n, "mangoldt");
  if (n == 1) return 0.0;
  std::uint64_t p = n;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t q = 3; q <= n / q; q += 2) {
      if (n % q == 0) {
        p = q;
        break;
      }
    }
  }
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, j] : f.pairs()) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < j; ++i) {
      power *= p;
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedDivisor> moebius_divisors(const Factorization& f) {
  std::vector<SignedDivisor> out{{1, 1}};
  for (const auto& [p, j] : f.pairs()) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < j; ++i) {
      power *= p;
      for (std::size_t k = 0; k < base; ++k) {
        out.push_back({out[k].divisor * power, i == 0 ? -out[k].moebius : 0});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SignedDivisor& a, const SignedDivisor& b) { return a.divisor < b.divisor; });
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  return divisors(factorize(n));
}

}  // namespace pnt
