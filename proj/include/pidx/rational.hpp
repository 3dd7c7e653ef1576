#pragma once
// Exact arithmetic used by the index computations: arbitrary-precision
// integers and rationals (Boost.Multiprecision, header-only) plus the one
// rendering rule every text output shares.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pidx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// Fixed-point decimal rendering with `places` digits after the point,
// rounding ties half away from zero: 0.6875 -> "0.688" at three places.
// This is the single rounding rule; CSV, table, and JSON renderings all go
// through it.
std::string decimal_string(const Rational& value, int places);

}  // namespace pidx
