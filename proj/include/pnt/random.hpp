#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pnt/rational.hpp"

namespace pnt {

// Reproducible draws for the randomized suites.
//
// Every randomized check owns a std::mt19937_64 seeded with the run seed.
// A draw in [lo, hi] maps one raw 64-bit output u to lo + u mod (hi - lo + 1);
// a rational draw takes a numerator in [-num_bound, num_bound] and then a
// denominator in [1, den_bound]. The engine and the mappings are fully
// specified, so another implementation can reproduce every sample.
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t u = engine_();
    return lo + static_cast<std::int64_t>(span == 0 ? u : u % span);
  }

  Rational rational(std::int64_t num_bound, std::int64_t den_bound) {
    const std::int64_t num = uniform(-num_bound, num_bound);
    const std::int64_t den = uniform(1, den_bound);
    return Rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

// An integer-valued function on pairs (d, e) with d * e <= limit, drawn
// row by row (d = 1, 2, ...; e ascending) from a SeededDraws stream.
class RandomPairFunction {
 public:
  RandomPairFunction(std::uint64_t limit, SeededDraws& draws, std::int64_t bound = 1000) : rows_(limit + 1) {
    for (std::uint64_t d = 1; d <= limit; ++d) {
      rows_[d].reserve(limit / d);
      for (std::uint64_t e = 1; e <= limit / d; ++e) rows_[d].push_back(draws.uniform(-bound, bound));
    }
  }

  std::int64_t operator()(std::uint64_t d, std::uint64_t e) const { return rows_.at(d).at(e - 1); }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace pnt
