#pragma once

// Exact non-negative rationals extended by +infinity, the slope map phi and
// the mediant.

#include "affmon/error.hpp"
#include "affmon/integer.hpp"

#include <compare>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace affmon {

/// Integer point of Z^2. Intermediate results (transformed vectors, matrix
/// columns) may leave the first quadrant; Vec2 is the checked N0^2 version.
struct IntVec2 {
  Int x;
  Int y;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

/// Point of N0^2: a monoid element or a generator.
class Vec2 {
 public:
  Vec2() = default;
  Vec2(Int x, Int y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ < 0 || y_ < 0) {
      throw Error(Errc::NegativeCoordinate,
                  "(" + x_.str() + "," + y_.str() + ") is not in N0^2");
    }
  }

  /// Returns nullopt when v has a negative coordinate.
  static std::optional<Vec2> from(const IntVec2& v) {
    if (v.x < 0 || v.y < 0) return std::nullopt;
    return Vec2(v.x, v.y);
  }

  const Int& x() const noexcept { return x_; }
  const Int& y() const noexcept { return y_; }
  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
  IntVec2 as_int() const { return {x_, y_}; }

  friend Vec2 operator+(const Vec2& u, const Vec2& v) {
    return Vec2(u.x_ + v.x_, u.y_ + v.y_);
  }
  friend Vec2 operator*(const Int& k, const Vec2& v) {
    return Vec2(k * v.x_, k * v.y_);
  }
  friend bool operator==(const Vec2&, const Vec2&) = default;

  std::string str() const { return x_.str() + "," + y_.str(); }

 private:
  Int x_ = 0;
  Int y_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x() << ',' << v.y() << ')';
}

/// Element of Q>=0 together with +infinity, always stored in lowest terms.
/// Infinity is 1/0 and zero is 0/1, so structural equality is value equality.
class ExtRat {
 public:
  ExtRat() : num_(0), den_(1) {}
  ExtRat(Int num, Int den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ < 0 || den_ < 0) {
      throw Error(Errc::InvalidArgument, "ExtRat takes non-negative parts, got " +
                                             num_.str() + "/" + den_.str());
    }
    if (num_ == 0 && den_ == 0) {
      throw Error(Errc::InvalidArgument, "0/0 is not an extended rational");
    }
    Int g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  static ExtRat infinity() { return ExtRat(1, 0); }

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_ == 0; }

  /// "p/q", "p" when q = 1, and "inf".
  std::string str() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  static ExtRat parse(std::string_view text);

  double approx() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  ExtRat reciprocal() const {
    if (num_ == 0) return infinity();
    return ExtRat(den_, num_);
  }

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& p, const ExtRat& q);

 private:
  Int num_;
  Int den_;
};

/// Cross-multiplication order on Q*; +inf is above every finite value.
inline std::strong_ordering cmp(const ExtRat& p, const ExtRat& q) {
  if (p.is_infinite() || q.is_infinite()) {
    return p.is_infinite() <=> q.is_infinite();
  }
  Int lhs = p.num() * q.den();
  Int rhs = q.num() * p.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const ExtRat& p, const ExtRat& q) {
  return cmp(p, q);
}

/// |p - q| for finite p, q.
inline ExtRat abs_diff(const ExtRat& p, const ExtRat& q) {
  if (p.is_infinite() || q.is_infinite()) {
    throw Error(Errc::InvalidArgument, "abs_diff needs finite operands");
  }
  Int n = p.num() * q.den() - q.num() * p.den();
  return ExtRat(abs(n), p.den() * q.den());
}

inline ExtRat ExtRat::parse(std::string_view text) {
  auto fail = [&] {
    return Error(Errc::SyntaxError,
                 "cannot parse '" + std::string(text) + "' as a rational");
  };
  auto parse_nat = [&](std::string_view digits) {
    if (digits.empty()) throw fail();
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw fail();
    }
    return Int(std::string(digits));
  };
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRat(parse_nat(text));
  Int den = parse_nat(text.substr(slash + 1));
  if (den == 0) throw fail();
  return ExtRat(parse_nat(text.substr(0, slash)), den);
}

inline std::ostream& operator<<(std::ostream& os, const ExtRat& r) {
  return os << r.str();
}

/// The slope map (x, y) -> x / y, with x / 0 = +inf.
inline ExtRat phi(const Vec2& v) {
  if (v.is_zero()) throw Error(Errc::ZeroVector, "phi(0,0) is undefined");
  return ExtRat(v.x(), v.y());
}

inline Vec2 mediant(const Vec2& u, const Vec2& v) { return u + v; }

/// Sign of phi(u) - phi(v) computed as u.x*v.y - v.x*u.y, valid for nonzero
/// u, v including the infinite slope.
inline std::strong_ordering slope_cmp(const Vec2& u, const Vec2& v) {
  Int lhs = u.x() * v.y();
  Int rhs = v.x() * u.y();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace affmon
