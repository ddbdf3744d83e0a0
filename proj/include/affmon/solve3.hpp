#pragma once

// Embedding dimension 3: S = <u, v, w> with u = (0,1), v = (a,b), w = (c,d).
//
// Every factorization of s = (x,y) comes from a representation
// x = alpha*a + beta*c; the multiplicity of u is then forced to
// delta = y - alpha*b - beta*d, and the representation lifts iff delta >= 0.
// Under bc - ad = 1 (the "star" condition) membership and the extreme
// factorization lengths have closed forms; without it only the general
// enumeration over representations applies.

#include "affmon/error.hpp"
#include "affmon/factorization.hpp"
#include "affmon/intlin.hpp"
#include "affmon/monoid.hpp"
#include "affmon/ratq.hpp"

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

namespace affmon {

/// x = alpha*a + beta*c with 0 <= alpha < c.
struct CanonicalRep {
  Int alpha;
  Int beta;
  friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
};

namespace detail {

// Inverse of a modulo c, in [0, c); requires gcd(a, c) == 1.
inline Int inverse_mod(const Int& a, const Int& c) {
  return mod_floor(ext_gcd(a, c).s, c);
}

inline void require_star(const CanonicalMonoid3& m) {
  if (!m.star()) {
    throw Error(Errc::StarRequired,
                "bc - ad = " + Int(m.b() * m.c() - m.a() * m.d()).str() + ", not 1");
  }
}

}  // namespace detail

/// Canonical representation of x in <a, c>; nullopt when x is not in <a, c>.
inline std::optional<CanonicalRep> canonical_rep(const Int& a, const Int& c, const Int& x) {
  if (a < 1 || c < 1 || x < 0) {
    throw Error(Errc::InvalidArgument, "canonical_rep needs a, c >= 1 and x >= 0");
  }
  if (gcd(a, c) != 1) throw Error(Errc::GcdNotOne, "gcd(" + a.str() + "," + c.str() + ") != 1");
  Int alpha = mod_floor(x * detail::inverse_mod(a, c), c);
  Int rest = x - alpha * a;
  if (rest < 0) return std::nullopt;
  return CanonicalRep{alpha, rest / c};
}

/// Multiplicity of (0,1) forced by the representation x = alpha*a + beta*c.
/// May be negative, in which case the representation does not lift.
inline Int delta(const CanonicalMonoid3& m, const Vec2& s, const Int& alpha, const Int& beta) {
  if (alpha < 0 || beta < 0 || alpha * m.a() + beta * m.c() != s.x()) {
    throw Error(Errc::RepMismatch, alpha.str() + "*" + m.a().str() + " + " + beta.str() + "*" +
                                       m.c().str() + " != " + s.x().str());
  }
  return s.y() - alpha * m.b() - beta * m.d();
}

/// Membership under star: x in <a, c> and x*d <= y*c. Members come back with
/// the factorization (delta, alpha, beta) built on the canonical
/// representation.
inline Membership member3_star(const CanonicalMonoid3& m, const Vec2& s) {
  detail::require_star(m);
  auto gens = m.gens();
  if (s.x() * m.d() > s.y() * m.c()) return Membership::no(Reason::PhiOutOfRange);
  auto rep = canonical_rep(m.a(), m.c(), s.x());
  if (!rep) return Membership::no(Reason::XNotRepresentable);
  Int dl = delta(m, s, rep->alpha, rep->beta);
  if (dl < 0) {
    throw Error(Errc::InternalInconsistency,
                "negative delta for a star member candidate (" + s.str() + ")");
  }
  return Membership::yes({Factorization({dl, rep->alpha, rep->beta}, gens, s)});
}

/// Every factorization, for any canonical monoid (star or not). Walks the
/// representations x = (alpha0 + c' t) a + (beta0 - a' t) c with
/// a' = a/g, c' = c/g, g = gcd(a, c), and keeps those with delta >= 0.
inline Membership member3_general(const CanonicalMonoid3& m, const Vec2& s) {
  auto gens = m.gens();
  Int g = gcd(m.a(), m.c());
  if (s.x() % g != 0) return Membership::no(Reason::XNotRepresentable);
  Int a1 = m.a() / g, c1 = m.c() / g;
  Int alpha0 = mod_floor((s.x() / g) * detail::inverse_mod(a1, c1), c1);
  if (alpha0 * m.a() > s.x()) return Membership::no(Reason::XNotRepresentable);
  Int beta0 = (s.x() - alpha0 * m.a()) / m.c();

  std::vector<Factorization> found;
  Int t_end = beta0 / a1;
  for (Int t = 0; t <= t_end; ++t) {
    Int alpha = alpha0 + c1 * t;
    Int beta = beta0 - a1 * t;
    Int dl = delta(m, s, alpha, beta);
    if (dl >= 0) found.emplace_back(std::vector<Int>{dl, alpha, beta}, gens, s);
  }
  if (found.empty()) return Membership::no(Reason::NoNonnegativeLift);
  return Membership::yes(std::move(found));
}

/// Which slope range s falls in relative to v = (a,b).
enum class SlopeBranch { below, boundary, above };

constexpr std::string_view to_string(SlopeBranch b) {
  switch (b) {
    case SlopeBranch::below: return "below";
    case SlopeBranch::boundary: return "boundary";
    case SlopeBranch::above: return "above";
  }
  return "unknown";
}

inline SlopeBranch slope_branch(const CanonicalMonoid3& m, const Vec2& s) {
  Int lhs = s.x() * m.b();
  Int rhs = s.y() * m.a();
  if (lhs < rhs) return SlopeBranch::below;
  if (lhs > rhs) return SlopeBranch::above;
  return SlopeBranch::boundary;
}

struct ExtremeFactorizations {
  Factorization t_zero;
  Int t_max_value;
  Factorization t_max;
  Int len_zero;
  Int len_max;
  SlopeBranch branch;
};

/// The factorizations (delta - t, alpha + c t, beta - a t) for t = 0 and for
/// the largest admissible t: floor(beta / a) when x/y <= a/b, delta when
/// x/y >= a/b. Length is linear in t with slope c - a - 1.
inline ExtremeFactorizations extreme_factorizations(const CanonicalMonoid3& m, const Vec2& s) {
  detail::require_star(m);
  if (s.is_zero()) throw Error(Errc::ZeroElement, "0 has only the empty factorization");
  auto mem = member3_star(m, s);
  if (!mem.member) throw Error(Errc::NotMember, "(" + s.str() + ") is not in S");
  const auto& base = mem.factorizations.front().mults();
  const Int& dl = base[0];
  const Int& alpha = base[1];
  const Int& beta = base[2];

  auto branch = slope_branch(m, s);
  Int t_max;
  switch (branch) {
    case SlopeBranch::below: t_max = beta / m.a(); break;
    case SlopeBranch::above: t_max = dl; break;
    case SlopeBranch::boundary:
      if (beta != dl * m.a()) {
        throw Error(Errc::InternalInconsistency, "on the ray of (a,b) but beta != a*delta");
      }
      t_max = dl;
      break;
  }

  auto gens = m.gens();
  Factorization far({dl - t_max, alpha + m.c() * t_max, beta - m.a() * t_max}, gens, s);
  Int len_zero = dl + alpha + beta;
  Int len_max = len_zero + t_max * (m.c() - m.a() - 1);
  if (far.length() != len_max) {
    throw Error(Errc::InternalInconsistency, "extreme length formula disagrees with the vector");
  }
  return {mem.factorizations.front(), t_max, std::move(far), std::move(len_zero),
          std::move(len_max), branch};
}

/// All factorizations under star, t = 0 .. t_max.
inline std::vector<Factorization> factorizations_star(const CanonicalMonoid3& m, const Vec2& s) {
  detail::require_star(m);
  auto gens = m.gens();
  if (s.is_zero()) return {Factorization({0, 0, 0}, gens, s)};
  auto ext = extreme_factorizations(m, s);
  const auto& base = ext.t_zero.mults();
  std::vector<Factorization> out;
  for (Int t = 0; t <= ext.t_max_value; ++t) {
    out.emplace_back(std::vector<Int>{base[0] - t, base[1] + m.c() * t, base[2] - m.a() * t},
                     gens, s);
  }
  return out;
}

inline ExtRat elasticity3(const CanonicalMonoid3& m, const Vec2& s) {
  detail::require_star(m);
  if (s.is_zero()) throw Error(Errc::ZeroElement, "elasticity of 0 is undefined");
  auto ext = extreme_factorizations(m, s);
  const Int& hi = std::max(ext.len_zero, ext.len_max);
  const Int& lo = std::min(ext.len_zero, ext.len_max);
  return ExtRat(hi, lo);
}

}  // namespace affmon
