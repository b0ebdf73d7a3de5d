#pragma once

#include <cmath>

namespace pnt {

// Neumaier's variant of Kahan summation. The state is plain data so a
// partially accumulated sum can be checkpointed and resumed bit-exactly.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double term) {
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + compensation; }
};

}  // namespace pnt
