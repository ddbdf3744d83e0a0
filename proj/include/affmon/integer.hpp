#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace affmon {

/// Arbitrary-precision signed integer used for every coordinate, length and
/// multiplicity in the library.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Non-negative gcd; gcd(0, 0) = 0.
inline Int gcd(const Int& a, const Int& b) {
  Int x = abs(a);
  Int y = abs(b);
  while (y != 0) {
    Int r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

/// Floor division for a positive divisor.
inline Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

/// Ceiling division for a positive divisor.
inline Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

/// Representative of n mod d in [0, d) for d > 0.
inline Int mod_floor(const Int& n, const Int& d) {
  Int r = n % d;
  if (r < 0) r += d;
  return r;
}

inline int sign(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace affmon
