#pragma once

#include <concepts>
#include <span>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "pnt/arith.hpp"
#include "pnt/errors.hpp"
#include "pnt/rational.hpp"

namespace pnt {

template <class T>
concept Ring = std::copyable<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  T(0);
};

// A function on 1..limit held by value.
template <Ring T>
class Tabulated {
 public:
  using value_type = T;

  template <class Fn>
    requires std::invocable<Fn&, std::uint64_t>
  static Tabulated from(std::uint64_t limit, Fn&& fn) {
    std::vector<T> values;
    values.reserve(limit);
    for (std::uint64_t n = 1; n <= limit; ++n) values.push_back(T(fn(n)));
    return Tabulated(std::move(values));
  }

  // values[i] is f(i + 1).
  explicit Tabulated(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("Tabulated: domain 1..N needs N >= 1");
  }

  std::uint64_t limit() const { return values_.size(); }

  const T& operator()(std::uint64_t n) const {
    if (n == 0 || n > limit()) {
      throw DomainError("Tabulated: argument " + std::to_string(n) + " outside 1.." + std::to_string(limit()));
    }
    return values_[n - 1];
  }

 private:
  std::vector<T> values_;
};

// Divisor lists of every n in 1..limit, ascending.
class DivisorTable {
 public:
  explicit DivisorTable(std::uint64_t limit);

  std::uint64_t limit() const { return offsets_.size() - 2; }
  std::span<const std::uint64_t> operator()(std::uint64_t n) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> flat_;
};

// Divisor source backed by trial-division factorization.
struct FactorDivisors {
  std::vector<std::uint64_t> operator()(std::uint64_t n) const { return divisors(n); }
};

// The tagged variant: exact rationals or reals.
using TabulatedFunction = std::variant<Tabulated<Rational>, Tabulated<double>>;
using Value = std::variant<Rational, double>;

// Exact equality for rationals; for reals |a-b| <= 1e-9 absolute or
// 1e-9 relative, whichever is larger. Mixed alternatives never agree.
bool values_agree(const Value& a, const Value& b);
bool reals_agree(double a, double b);

namespace detail {

inline void require_in_domain(std::uint64_t n, std::uint64_t limit, const char* op) {
  if (n == 0 || n > limit) {
    throw DomainError(std::string(op) + ": n=" + std::to_string(n) + " outside 1.." + std::to_string(limit));
  }
}

inline void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": n must be positive");
}

template <class Fn>
using pair_result_t = std::remove_cvref_t<std::invoke_result_t<Fn&, std::uint64_t, std::uint64_t>>;

}  // namespace detail

// Sum of f(d) over divisors d of n.
template <Ring T, class Divs = FactorDivisors>
T divisor_sum(std::uint64_t n, const Tabulated<T>& f, const Divs& divs = {}) {
  detail::require_in_domain(n, f.limit(), "divisor_sum");
  T acc(0);
  for (std::uint64_t d : divs(n)) acc = acc + f(d);
  return acc;
}

// Sum of f(n/d) over divisors d of n; equal to divisor_sum by d -> n/d.
template <Ring T, class Divs = FactorDivisors>
T divisor_sum_reflected(std::uint64_t n, const Tabulated<T>& f, const Divs& divs = {}) {
  detail::require_in_domain(n, f.limit(), "divisor_sum_reflected");
  T acc(0);
  for (std::uint64_t d : divs(n)) acc = acc + f(n / d);
  return acc;
}

// Sum over d <= n, d' <= n/d of f(d, d').
template <class Fn>
auto triangle_sum_lhs(std::uint64_t n, Fn&& f) -> detail::pair_result_t<Fn> {
  detail::require_positive(n, "triangle_sum_lhs");
  detail::pair_result_t<Fn> acc(0);
  for (std::uint64_t d = 1; d <= n; ++d) {
    for (std::uint64_t e = 1, m = n / d; e <= m; ++e) acc = acc + f(d, e);
  }
  return acc;
}

// Sum over c <= n, d | c of f(d, c/d).
template <class Fn, class Divs = FactorDivisors>
auto triangle_sum_rhs(std::uint64_t n, Fn&& f, const Divs& divs = {}) -> detail::pair_result_t<Fn> {
  detail::require_positive(n, "triangle_sum_rhs");
  detail::pair_result_t<Fn> acc(0);
  for (std::uint64_t c = 1; c <= n; ++c) {
    for (std::uint64_t d : divs(c)) acc = acc + f(d, c / d);
  }
  return acc;
}

// Sum over d | n, d' | (n/d) of f(d, d').
template <class Fn, class Divs = FactorDivisors>
auto divisor_pair_sum_lhs(std::uint64_t n, Fn&& f, const Divs& divs = {}) -> detail::pair_result_t<Fn> {
  detail::require_positive(n, "divisor_pair_sum_lhs");
  detail::pair_result_t<Fn> acc(0);
  for (std::uint64_t d : divs(n)) {
    for (std::uint64_t e : divs(n / d)) acc = acc + f(d, e);
  }
  return acc;
}

// Sum over c | n, d | c of f(d, c/d).
template <class Fn, class Divs = FactorDivisors>
auto divisor_pair_sum_rhs(std::uint64_t n, Fn&& f, const Divs& divs = {}) -> detail::pair_result_t<Fn> {
  detail::require_positive(n, "divisor_pair_sum_rhs");
  detail::pair_result_t<Fn> acc(0);
  for (std::uint64_t c : divs(n)) {
    for (std::uint64_t d : divs(c)) acc = acc + f(d, c / d);
  }
  return acc;
}

// Sum of mu(d) over d | n, which is 1 for n = 1 and 0 otherwise.
std::int64_t moebius_divisor_sum(std::uint64_t n);

// Sum over d | n of mu(d) f(n/d). When f(m) = sum_{d|m} g(d) this is g(n).
template <Ring T>
T moebius_invert(const Tabulated<T>& f, std::uint64_t n) {
  detail::require_in_domain(n, f.limit(), "moebius_invert");
  T acc(0);
  for (const auto& [d, mu] : moebius_divisors(factorize(n))) {
    if (mu == 1) {
      acc = acc + f(n / d);
    } else if (mu == -1) {
      acc = acc - f(n / d);
    }
  }
  return acc;
}

namespace detail {

inline void check_partial_summation(std::uint64_t f_limit, std::uint64_t g_limit, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || a > b) {
    throw DomainError("partial_summation: need 1 <= a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  if (b + 2 > f_limit || b + 2 > g_limit) {
    throw DomainError("partial_summation: f and G must be defined on 1.." + std::to_string(b + 2));
  }
}

}  // namespace detail

// Partial summation with F(n) = f(1) + ... + f(n):
//   lhs = sum_{n=a}^{b} f(n+1) G(n+1)
//   rhs = F(b+1) G(b+1) - F(a) G(a+1) - sum_{n=a}^{b-1} F(n+1) (G(n+2) - G(n+1))
// Both need 1 <= a <= b and f, G defined on 1..b+2.
template <Ring T>
T partial_summation_lhs(const Tabulated<T>& f, const Tabulated<T>& g, std::uint64_t a, std::uint64_t b) {
  detail::check_partial_summation(f.limit(), g.limit(), a, b);
  T acc(0);
  for (std::uint64_t n = a; n <= b; ++n) acc = acc + f(n + 1) * g(n + 1);
  return acc;
}

template <Ring T>
T partial_summation_rhs(const Tabulated<T>& f, const Tabulated<T>& g, std::uint64_t a, std::uint64_t b) {
  detail::check_partial_summation(f.limit(), g.limit(), a, b);
  std::vector<T> prefix{T(0)};
  prefix.reserve(b + 2);
  for (std::uint64_t i = 1; i <= b + 1; ++i) prefix.push_back(prefix.back() + f(i));
  T tail(0);
  for (std::uint64_t n = a; n + 1 <= b; ++n) tail = tail + prefix[n + 1] * (g(n + 2) - g(n + 1));
  return prefix[b + 1] * g(b + 1) - prefix[a] * g(a + 1) - tail;
}

// Variant entry points.
Value divisor_sum(std::uint64_t n, const TabulatedFunction& f);
Value divisor_sum_reflected(std::uint64_t n, const TabulatedFunction& f);
Value moebius_invert(const TabulatedFunction& f, std::uint64_t n);
// f and G must hold the same alternative.
Value partial_summation_lhs(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t a,
                            std::uint64_t b);
Value partial_summation_rhs(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t a,
                            std::uint64_t b);

}  // namespace pnt
