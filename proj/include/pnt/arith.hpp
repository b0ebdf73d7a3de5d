#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace pnt {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned multiplicity = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Canonical form p1^j1 * ... * ps^js with p1 < ... < ps and every j >= 1.
// The empty factorization is n = 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates the canonical-form invariants; throws DomainError otherwise.
  explicit Factorization(std::vector<PrimePower> pairs);

  std::span<const PrimePower> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Product of p^j; throws DomainError on 64-bit overflow.
  std::uint64_t value() const;
  bool squarefree() const;

  // Exponent of p, 0 if p does not occur.
  unsigned exponent_of(std::uint64_t p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Trial division up to sqrt(n). All of these reject n = 0 with DomainError.
Factorization factorize(std::uint64_t n);

// Largest e with p^e | n. Rejects non-prime p.
unsigned multiplicity(std::uint64_t p, std::uint64_t n);

// Greatest squarefree divisor of n.
std::uint64_t radical(std::uint64_t n);
std::uint64_t radical(const Factorization& f);

// (-1)^s for squarefree n with s prime factors, 0 otherwise.
int moebius(std::uint64_t n);
int moebius(const Factorization& f);

// ln p when n = p^a with a >= 1, else 0. Prime-power detection is integer only.
double mangoldt(std::uint64_t n);
double mangoldt(const Factorization& f);

// All positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

struct SignedDivisor {
  std::uint64_t divisor;
  int moebius;
};

// Every divisor d of the factored number, ascending, paired with mu(d).
std::vector<SignedDivisor> moebius_divisors(const Factorization& f);

}  // namespace pnt
