#include "latnorm/numeric.hpp"

#include <boost/multiprecision/integer.hpp>
#include <limits>

#include "latnorm/error.hpp"

namespace latnorm {

int sign(const Int& a) { return a.sign(); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) {
    ++q;
  }
  return q;
}

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

bool is_integral(const Rat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

long long to_int64(const Int& a) {
  static const Int kMin = std::numeric_limits<long long>::min();
  static const Int kMax = std::numeric_limits<long long>::max();
  if (a < kMin || a > kMax) {
    throw Error(ErrorKind::ParseError,
                "integer out of 64-bit range: " + a.str());
  }
  return a.convert_to<long long>();
}

}  // namespace latnorm
