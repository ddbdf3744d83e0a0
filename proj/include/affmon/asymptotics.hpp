#pragma once

// Elasticity of multiples k*s under the star condition: the exact values on
// the periodic subsequences k = ac*k' (slope at most a/b) and k = c*k'
// (slope at least a/b), and the k -> infinity limit. All three are linear
// fractional in the slope x/y, raised to tau = sign(c - a - 1).

#include "affmon/error.hpp"
#include "affmon/monoid.hpp"
#include "affmon/ratq.hpp"
#include "affmon/solve3.hpp"

#include <utility>
#include <vector>

namespace affmon {

inline int tau(const CanonicalMonoid3& m) { return sign(m.c() - m.a() - 1); }

/// (x, y) -> ((p x + q y) / (r x + t y))^tau. The fraction is kept
/// un-inverted; tau is applied in evaluate(), so the result is always >= 1
/// on members.
struct LimitLFT {
  Int p, q, r, t;
  int tau = 0;

  ExtRat evaluate(const Vec2& s) const {
    if (tau == 0) return ExtRat(1);
    Int num = p * s.x() + q * s.y();
    Int den = r * s.x() + t * s.y();
    if (num <= 0 || den <= 0) {
      throw Error(Errc::InvalidArgument, "linear fractional map is not positive at (" + s.str() + ")");
    }
    ExtRat v(num, den);
    return tau > 0 ? v : v.reciprocal();
  }

  friend bool operator==(const LimitLFT&, const LimitLFT&) = default;
};

/// (c/a) (y a - x (b-1)) / (y c - x (d-1)), for slopes at most a/b.
inline LimitLFT low_slope_lft(const CanonicalMonoid3& m) {
  const Int &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  return {-c * (b - 1), c * a, -a * (d - 1), a * c, tau(m)};
}

/// c (y (c-a) - x (d-b)) / (y c - x (d-1)), for slopes at least a/b.
inline LimitLFT high_slope_lft(const CanonicalMonoid3& m) {
  const Int &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  return {-c * (d - b), c * (c - a), -(d - 1), c, tau(m)};
}

namespace detail {

inline void require_nonzero_member(const CanonicalMonoid3& m, const Vec2& s) {
  require_star(m);
  if (s.is_zero()) throw Error(Errc::ZeroElement, "multiples of 0 have no elasticity");
  if (!member3_star(m, s).member) throw Error(Errc::NotMember, "(" + s.str() + ") is not in S");
}

}  // namespace detail

/// rho(k s) for ac | k and x/y <= a/b; independent of k.
inline ExtRat rho_special_ac(const CanonicalMonoid3& m, const Vec2& s, const Int& k) {
  detail::require_nonzero_member(m, s);
  if (k < 1 || k % (m.a() * m.c()) != 0) {
    throw Error(Errc::PeriodicityViolated, "ac = " + Int(m.a() * m.c()).str() +
                                               " does not divide k = " + k.str());
  }
  if (slope_branch(m, s) == SlopeBranch::above) {
    throw Error(Errc::WrongBranch, "x/y > a/b");
  }
  return low_slope_lft(m).evaluate(s);
}

/// rho(k s) for c | k and x/y >= a/b; independent of k.
inline ExtRat rho_special_c(const CanonicalMonoid3& m, const Vec2& s, const Int& k) {
  detail::require_nonzero_member(m, s);
  if (k < 1 || k % m.c() != 0) {
    throw Error(Errc::PeriodicityViolated, "c = " + m.c().str() + " does not divide k = " + k.str());
  }
  if (slope_branch(m, s) == SlopeBranch::below) {
    throw Error(Errc::WrongBranch, "x/y < a/b");
  }
  return high_slope_lft(m).evaluate(s);
}

struct LimitResult {
  LimitLFT lft;
  ExtRat value;
  SlopeBranch branch;
};

/// lim_{k -> inf} rho(k s). On the ray of (a,b) both maps are evaluated and
/// must agree.
inline LimitResult rho_limit(const CanonicalMonoid3& m, const Vec2& s) {
  detail::require_nonzero_member(m, s);
  auto branch = slope_branch(m, s);
  switch (branch) {
    case SlopeBranch::below: {
      auto lft = low_slope_lft(m);
      return {lft, lft.evaluate(s), branch};
    }
    case SlopeBranch::above: {
      auto lft = high_slope_lft(m);
      return {lft, lft.evaluate(s), branch};
    }
    case SlopeBranch::boundary: break;
  }
  auto low = low_slope_lft(m);
  auto value = low.evaluate(s);
  if (high_slope_lft(m).evaluate(s) != value) {
    throw Error(Errc::InternalInconsistency, "limit branches disagree on the ray of (a,b)");
  }
  return {low, value, branch};
}

struct ScanRow {
  Int k;
  ExtRat rho_exact;
  ExtRat rho_limit;
  ExtRat gap;
};

/// rho(k s) recomputed exactly for k = 1 .. k_max, next to the limit.
inline std::vector<ScanRow> scan_multiples(const CanonicalMonoid3& m, const Vec2& s, const Int& k_max) {
  if (k_max < 1) throw Error(Errc::InvalidArgument, "k_max must be positive");
  auto limit = rho_limit(m, s).value;
  std::vector<ScanRow> rows;
  rows.reserve(k_max.convert_to<std::size_t>());
  for (Int k = 1; k <= k_max; ++k) {
    ExtRat exact = elasticity3(m, k * s);
    rows.push_back({k, exact, limit, abs_diff(exact, limit)});
  }
  return rows;
}

}  // namespace affmon
