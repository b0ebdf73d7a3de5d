#include "pnt/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace pnt {

bool reals_agree(double a, double b) {
  const double tol = std::max(1e-9, 1e-9 * std::max(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) <= tol;
}

bool values_agree(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ra = std::get_if<Rational>(&a)) return *ra == std::get<Rational>(b);
  return reals_agree(std::get<double>(a), std::get<double>(b));
}

DivisorTable::DivisorTable(std::uint64_t limit) {
  if (limit == 0) throw DomainError("DivisorTable: limit must be positive");
  std::vector<std::size_t> counts(limit + 2, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) ++counts[m];
  }
  offsets_.assign(limit + 2, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) offsets_[n + 1] = offsets_[n] + counts[n];
  flat_.resize(offsets_[limit + 1]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) flat_[cursor[m]++] = d;
  }
}

std::span<const std::uint64_t> DivisorTable::operator()(std::uint64_t n) const {
  detail::require_in_domain(n, limit(), "DivisorTable");
  return {flat_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

std::int64_t moebius_divisor_sum(std::uint64_t n) {
  detail::require_positive(n, "moebius_divisor_sum");
  std::int64_t acc = 0;
  for (const auto& [d, mu] : moebius_divisors(factorize(n))) acc += mu;
  return acc;
}

Value divisor_sum(std::uint64_t n, const TabulatedFunction& f) {
  return std::visit([n](const auto& tab) -> Value { return divisor_sum(n, tab); }, f);
}

Value divisor_sum_reflected(std::uint64_t n, const TabulatedFunction& f) {
  return std::visit([n](const auto& tab) -> Value { return divisor_sum_reflected(n, tab); }, f);
}

Value moebius_invert(const TabulatedFunction& f, std::uint64_t n) {
  return std::visit([n](const auto& tab) -> Value { return moebius_invert(tab, n); }, f);
}

namespace {

template <class Op>
Value visit_pair(const TabulatedFunction& f, const TabulatedFunction& g, Op op) {
  if (f.index() != g.index()) throw DomainError("partial_summation: f and G must share a value type");
  return std::visit(
      [&](const auto& tf) -> Value {
        using Tab = std::remove_cvref_t<decltype(tf)>;
        return op(tf, std::get<Tab>(g));
      },
      f);
}

}  // namespace

Value partial_summation_lhs(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t a,
                            std::uint64_t b) {
  return visit_pair(f, g, [&](const auto& tf, const auto& tg) -> Value { return partial_summation_lhs(tf, tg, a, b); });
}

Value partial_summation_rhs(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t a,
                            std::uint64_t b) {
  return visit_pair(f, g, [&](const auto& tf, const auto& tg) -> Value { return partial_summation_rhs(tf, tg, a, b); });
}

}  // namespace pnt
