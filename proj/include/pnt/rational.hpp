#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pnt {

// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace pnt
