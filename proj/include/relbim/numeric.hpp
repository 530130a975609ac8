#pragma once
// Exact arithmetic types. Every verdict in this library is an exact
// rank/kernel statement, so all coefficients are arbitrary-precision.

#include <boost/multiprecision/cpp_int.hpp>

namespace relbim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace relbim
