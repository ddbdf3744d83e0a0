#pragma once

// Embedding dimension 2: S = <(0,1), (a,b)>. Membership is decided by the
// slope bound x/y <= a/b together with a | x, and every member has exactly
// one factorization.

#include "affmon/error.hpp"
#include "affmon/factorization.hpp"
#include "affmon/monoid.hpp"
#include "affmon/ratq.hpp"

namespace affmon {

inline Membership member2(const CanonicalMonoid2& m, const Vec2& s) {
  auto gens = m.gens();
  if (s.is_zero()) return Membership::yes({Factorization({0, 0}, gens, s)});
  if (s.x() * m.b() > s.y() * m.a()) return Membership::no(Reason::PhiOutOfRange);
  if (s.x() % m.a() != 0) return Membership::no(Reason::DivisibilityFails);
  Int k = s.x() / m.a();
  return Membership::yes({Factorization({s.y() - k * m.b(), k}, gens, s)});
}

inline ExtRat elasticity2(const CanonicalMonoid2& m, const Vec2& s) {
  if (s.is_zero()) throw Error(Errc::ZeroElement, "elasticity of 0 is undefined");
  if (!member2(m, s).member) throw Error(Errc::NotMember, "(" + s.str() + ") is not in S");
  return ExtRat(1);
}

}  // namespace affmon
