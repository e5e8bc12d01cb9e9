#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latnorm {

// All geometry in this library is exact: arbitrary-precision integers for
// lattice data, rationals only where hyperplane sections force them.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

int sign(const Int& a);

// Floor/ceil division for arbitrary signs of a; b must be nonzero.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// gcd(|a|, |b|); gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);

bool is_integral(const Rat& r);

// Throws Error(ErrorKind::ParseError) when the value does not fit.
long long to_int64(const Int& a);

}  // namespace latnorm
