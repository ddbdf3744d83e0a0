#pragma once

// Affine monoids in N0^2 with two or three generators: validation and the
// normal form <(0,1), (a,b)[, (c,d)]> with generators in ascending slope.

#include "affmon/error.hpp"
#include "affmon/integer.hpp"
#include "affmon/intlin.hpp"
#include "affmon/oracle.hpp"
#include "affmon/ratq.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <variant>
#include <vector>

namespace affmon {

/// Generator list as given by the user: nonzero, pairwise distinct.
class RawMonoid {
 public:
  explicit RawMonoid(std::vector<Vec2> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error(Errc::BadDimension, "a monoid needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].is_zero()) {
        throw Error(Errc::ZeroGenerator, "generator " + std::to_string(i) + " is (0,0)");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (gens_[i] == gens_[j]) {
          throw Error(Errc::DuplicateGenerator, "generator (" + gens_[i].str() + ") repeats");
        }
      }
    }
  }

  std::span<const Vec2> gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

 private:
  std::vector<Vec2> gens_;
};

namespace detail {

inline void require_primitive(const Int& x, const Int& y, const char* what) {
  if (gcd(x, y) != 1) {
    throw Error(Errc::NotCanonical, std::string(what) + " (" + x.str() + "," + y.str() +
                                        ") is not phi-minimal");
  }
}

}  // namespace detail

/// <(0,1), (a,b)> with gcd(a,b) = 1 and a >= 1. `transform` maps original
/// coordinates to canonical ones; `source[i]` is the original index of
/// canonical generator i.
class CanonicalMonoid2 {
 public:
  CanonicalMonoid2(Int a, Int b, UniMat2 transform = {}, std::array<std::size_t, 2> source = {0, 1})
      : a_(std::move(a)), b_(std::move(b)), transform_(std::move(transform)), source_(source) {
    if (a_ < 1 || b_ < 0) throw Error(Errc::NotCanonical, "need a >= 1 and b >= 0");
    detail::require_primitive(a_, b_, "generator");
  }

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const UniMat2& transform() const noexcept { return transform_; }
  const std::array<std::size_t, 2>& source() const noexcept { return source_; }

  std::array<Vec2, 2> gens() const { return {Vec2(0, 1), Vec2(a_, b_)}; }
  Mat2xP matrix() const { auto g = gens(); return Mat2xP::from_vectors(g); }

  /// Query vector in canonical coordinates; nullopt when it leaves N0^2,
  /// which already rules out membership.
  std::optional<Vec2> to_canonical(const Vec2& s) const {
    return Vec2::from(transform_.apply(s));
  }

 private:
  Int a_, b_;
  UniMat2 transform_;
  std::array<std::size_t, 2> source_;
};

/// <(0,1), (a,b), (c,d)> with 0 < a/b < c/d, both generators primitive.
class CanonicalMonoid3 {
 public:
  CanonicalMonoid3(Int a, Int b, Int c, Int d, UniMat2 transform = {},
                   std::array<std::size_t, 3> source = {0, 1, 2})
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        transform_(std::move(transform)), source_(source) {
    if (a_ < 1 || b_ < 0 || c_ < 1 || d_ < 0) {
      throw Error(Errc::NotCanonical, "need a, c >= 1 and b, d >= 0");
    }
    detail::require_primitive(a_, b_, "generator");
    detail::require_primitive(c_, d_, "generator");
    if (!(a_ * d_ < b_ * c_)) throw Error(Errc::NotCanonical, "need a/b < c/d");
    star_ = b_ * c_ - a_ * d_ == 1;
  }

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }
  const Int& d() const noexcept { return d_; }
  bool star() const noexcept { return star_; }
  const UniMat2& transform() const noexcept { return transform_; }
  const std::array<std::size_t, 3>& source() const noexcept { return source_; }

  std::array<Vec2, 3> gens() const { return {Vec2(0, 1), Vec2(a_, b_), Vec2(c_, d_)}; }
  Mat2xP matrix() const { auto g = gens(); return Mat2xP::from_vectors(g); }

  std::optional<Vec2> to_canonical(const Vec2& s) const {
    return Vec2::from(transform_.apply(s));
  }

 private:
  Int a_, b_, c_, d_;
  bool star_ = false;
  UniMat2 transform_;
  std::array<std::size_t, 3> source_;
};

using CanonicalMonoid = std::variant<CanonicalMonoid2, CanonicalMonoid3>;

/// bc - ad == 1.
inline bool check_star(const CanonicalMonoid3& m) { return m.star(); }

/// True iff no generator lies in the monoid spanned by the others.
inline bool validate_minimal_generation(std::span<const Vec2> gens) {
  if (gens.size() < 2) return true;
  std::vector<Vec2> others;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (!enumerate_factorizations(others, gens[i]).empty()) return false;
  }
  return true;
}

inline bool validate_minimal_generation(const CanonicalMonoid2& m) {
  auto g = m.gens();
  return validate_minimal_generation(g);
}

inline bool validate_minimal_generation(const CanonicalMonoid3& m) {
  auto g = m.gens();
  return validate_minimal_generation(g);
}

enum class Minimality { check, skip };

/// Sorts generators by slope, applies the row-swapped HNF so the flattest one
/// becomes (0,1), and re-sorts. Rejects inputs the normal form does not cover.
inline CanonicalMonoid canonicalize(const RawMonoid& raw, Minimality minimality = Minimality::check) {
  auto gens = raw.gens();
  if (gens.size() != 2 && gens.size() != 3) {
    throw Error(Errc::BadDimension, "canonical solvers take 2 or 3 generators, got " +
                                        std::to_string(gens.size()));
  }
  for (const auto& g : gens) {
    if (gcd(g.x(), g.y()) != 1) {
      throw Error(Errc::NotPhiMinimal, "generator (" + g.str() + ") has coordinate gcd > 1");
    }
  }
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return slope_cmp(gens[i], gens[j]) < 0;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (slope_cmp(gens[order[i - 1]], gens[order[i]]) == 0) {
      throw Error(Errc::DuplicatePhi, "generators (" + gens[order[i - 1]].str() + ") and (" +
                                          gens[order[i]].str() + ") share a slope");
    }
  }
  std::vector<IntVec2> cols;
  for (auto i : order) cols.push_back(gens[i].as_int());

  std::optional<HnfResult> hnf;
  try {
    hnf = row_swapped_hnf(Mat2xP(std::move(cols)));
  } catch (const Error& e) {
    if (e.code() != Errc::NegativeResult) throw;
    throw Error(Errc::NormalizationEscapesCone, e.what());
  }

  std::vector<std::pair<Vec2, std::size_t>> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto v = Vec2::from(hnf->result.col(i));
    if (!v) throw Error(Errc::NormalizationEscapesCone, "normalized generator left N0^2");
    out.emplace_back(*v, order[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return slope_cmp(l.first, r.first) < 0;
  });
  if (out.front().first != Vec2(0, 1)) {
    throw Error(Errc::InternalInconsistency, "normal form does not start at (0,1)");
  }

  CanonicalMonoid result = [&]() -> CanonicalMonoid {
    if (out.size() == 2) {
      return CanonicalMonoid2(out[1].first.x(), out[1].first.y(), hnf->transform,
                              {out[0].second, out[1].second});
    }
    return CanonicalMonoid3(out[1].first.x(), out[1].first.y(), out[2].first.x(),
                            out[2].first.y(), hnf->transform,
                            {out[0].second, out[1].second, out[2].second});
  }();
  if (minimality == Minimality::check) {
    bool minimal = std::visit([](const auto& m) { return validate_minimal_generation(m); }, result);
    if (!minimal) {
      throw Error(Errc::NotMinimallyGenerated, "some generator is a sum of the others");
    }
  }
  return result;
}

}  // namespace affmon
