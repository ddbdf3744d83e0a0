#pragma once

// Integer linear algebra on 2 x p matrices: extended gcd, the row-swapped
// Hermite normal form that sends a primitive column to (0,1), and the
// determinantal divisors d1, d2.

#include "affmon/error.hpp"
#include "affmon/integer.hpp"
#include "affmon/ratq.hpp"

#include <span>
#include <utility>
#include <vector>

namespace affmon {

struct ExtGcd {
  Int g;  // gcd(|a|, |b|) > 0
  Int s;
  Int t;  // s*a + t*b == g
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw Error(Errc::BothZero, "ext_gcd(0, 0)");
  Int r0 = abs(a), r1 = abs(b);
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a < 0) s0 = -s0;
  if (b < 0) t0 = -t0;
  return {r0, s0, t0};
}

/// 2x2 integer matrix with determinant +1 or -1, stored row-major.
class UniMat2 {
 public:
  UniMat2() : m_{1, 0, 0, 1} {}
  UniMat2(Int m00, Int m01, Int m10, Int m11)
      : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
    Int d = det();
    if (d != 1 && d != -1) {
      throw Error(Errc::NotUnimodular, "determinant is " + d.str());
    }
  }

  static UniMat2 identity() { return {}; }

  const Int& operator()(int row, int col) const { return m_[2 * row + col]; }
  Int det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool is_identity() const { return m_[0] == 1 && m_[1] == 0 && m_[2] == 0 && m_[3] == 1; }

  IntVec2 apply(const IntVec2& v) const {
    return {m_[0] * v.x + m_[1] * v.y, m_[2] * v.x + m_[3] * v.y};
  }
  IntVec2 apply(const Vec2& v) const { return apply(v.as_int()); }

  UniMat2 inverse() const {
    // det is +-1, so the adjugate scaled by det is integral.
    Int d = det();
    return UniMat2(d * m_[3], -d * m_[1], -d * m_[2], d * m_[0]);
  }

  friend UniMat2 operator*(const UniMat2& l, const UniMat2& r) {
    return UniMat2(l.m_[0] * r.m_[0] + l.m_[1] * r.m_[2],
                   l.m_[0] * r.m_[1] + l.m_[1] * r.m_[3],
                   l.m_[2] * r.m_[0] + l.m_[3] * r.m_[2],
                   l.m_[2] * r.m_[1] + l.m_[3] * r.m_[3]);
  }
  friend bool operator==(const UniMat2&, const UniMat2&) = default;

 private:
  Int m_[4];
};

/// 2 x p integer matrix given by its columns, p >= 1.
class Mat2xP {
 public:
  explicit Mat2xP(std::vector<IntVec2> cols) : cols_(std::move(cols)) {
    if (cols_.empty()) throw Error(Errc::EmptyMatrix, "a 2 x p matrix needs p >= 1");
  }
  static Mat2xP from_vectors(std::span<const Vec2> vs) {
    std::vector<IntVec2> cols;
    cols.reserve(vs.size());
    for (const auto& v : vs) cols.push_back(v.as_int());
    return Mat2xP(std::move(cols));
  }

  std::size_t cols() const noexcept { return cols_.size(); }
  const IntVec2& col(std::size_t j) const { return cols_.at(j); }
  std::span<const IntVec2> columns() const noexcept { return cols_; }

  Mat2xP appended(const IntVec2& v) const {
    auto cols = cols_;
    cols.push_back(v);
    return Mat2xP(std::move(cols));
  }

  friend Mat2xP operator*(const UniMat2& u, const Mat2xP& m) {
    std::vector<IntVec2> cols;
    cols.reserve(m.cols_.size());
    for (const auto& c : m.cols_) cols.push_back(u.apply(c));
    return Mat2xP(std::move(cols));
  }
  friend bool operator==(const Mat2xP&, const Mat2xP&) = default;

 private:
  std::vector<IntVec2> cols_;
};

struct DetDivisors {
  Int d1;
  Int d2;
  friend bool operator==(const DetDivisors&, const DetDivisors&) = default;
};

/// d1 = gcd of all entries, d2 = gcd of all 2x2 minors (0 when p < 2).
inline DetDivisors det_divisors(const Mat2xP& m) {
  DetDivisors out{0, 0};
  auto cols = m.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out.d1 = gcd(out.d1, gcd(cols[i].x, cols[i].y));
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      out.d2 = gcd(out.d2, cols[i].x * cols[j].y - cols[j].x * cols[i].y);
    }
  }
  return out;
}

struct HnfResult {
  UniMat2 transform;  // transform * input == result
  Mat2xP result;
};

/// Unimodular U' with U' * first column = (0,1) and every column of U' * M
/// in N0^2. The first row of U' is (q, -p) for first column (p, q), so the
/// new x-coordinates are cross products with the first column. The second
/// row comes from ext_gcd(p, q) and is sheared by the least k >= 0 multiples
/// of the first row that makes every y-coordinate non-negative.
inline HnfResult row_swapped_hnf(const Mat2xP& m) {
  const IntVec2& first = m.col(0);
  if (gcd(first.x, first.y) != 1) {
    throw Error(Errc::NotPhiMinimal, "first column (" + first.x.str() + "," +
                                         first.y.str() + ") is not primitive");
  }
  auto eg = ext_gcd(first.x, first.y);
  Int r0 = first.y, r1 = -first.x;
  Int r2 = eg.s, r3 = eg.t;

  Int shear = 0;
  for (const auto& c : m.columns()) {
    Int nx = r0 * c.x + r1 * c.y;
    Int ny = r2 * c.x + r3 * c.y;
    if (nx < 0 || (nx == 0 && ny < 0)) {
      throw Error(Errc::NegativeResult,
                  "column (" + c.x.str() + "," + c.y.str() +
                      ") cannot be brought into N0^2 with the first column at (0,1)");
    }
    if (ny < 0) shear = std::max(shear, ceil_div(-ny, nx));
  }
  UniMat2 u(r0, r1, r2 + shear * r0, r3 + shear * r1);
  return {u, u * m};
}

enum class D2Verdict { inconclusive, not_member };

/// Sound but incomplete: appending a member of the monoid never changes d2.
inline D2Verdict d2_test(const Mat2xP& m, const Vec2& s) {
  return det_divisors(m).d2 == det_divisors(m.appended(s.as_int())).d2
             ? D2Verdict::inconclusive
             : D2Verdict::not_member;
}

constexpr std::string_view to_string(D2Verdict v) {
  return v == D2Verdict::inconclusive ? "inconclusive" : "not_member";
}

}  // namespace affmon
