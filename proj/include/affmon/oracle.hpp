#pragma once

// Brute-force factorization enumerator over an arbitrary generator list in
// N0^2. Ground truth for the closed forms; uses nothing from the solvers.

#include "affmon/error.hpp"
#include "affmon/factorization.hpp"
#include "affmon/integer.hpp"
#include "affmon/ratq.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace affmon {

struct FactorizationSet {
  Vec2 target;
  std::vector<Factorization> facts;
  std::vector<Int> lengths;  // sorted ascending, with repetition

  bool empty() const noexcept { return facts.empty(); }
};

namespace detail {

// Largest m with m * g <= r coordinatewise (g nonzero).
inline Int multiplicity_bound(const IntVec2& r, const Vec2& g) {
  std::optional<Int> bound;
  if (g.x() > 0) bound = r.x / g.x();
  if (g.y() > 0) {
    Int by = r.y / g.y();
    if (!bound || by < *bound) bound = by;
  }
  return *bound;
}

class Enumerator {
 public:
  Enumerator(std::span<const Vec2> gens, std::size_t solved)
      : gens_(gens), solved_(solved), mults_(gens.size(), 0) {}

  void run(const IntVec2& target, std::vector<std::vector<Int>>& out) {
    out_ = &out;
    recurse(0, target);
  }

 private:
  void recurse(std::size_t i, const IntVec2& rem) {
    if (i == gens_.size()) {
      close(rem);
      return;
    }
    if (i == solved_) {
      recurse(i + 1, rem);
      return;
    }
    const Vec2& g = gens_[i];
    Int bound = multiplicity_bound(rem, g);
    IntVec2 r = rem;
    for (Int m = 0; m <= bound; ++m) {
      mults_[i] = m;
      recurse(i + 1, r);
      r.x -= g.x();
      r.y -= g.y();
    }
    mults_[i] = 0;
  }

  // Every other multiplicity is fixed; the solved generator must cover the
  // remainder exactly.
  void close(const IntVec2& rem) {
    const Vec2& g = gens_[solved_];
    Int m = g.x() > 0 ? Int(rem.x / g.x()) : Int(rem.y / g.y());
    if (m * g.x() != rem.x || m * g.y() != rem.y) return;
    mults_[solved_] = m;
    out_->push_back(mults_);
    mults_[solved_] = 0;
  }

  std::span<const Vec2> gens_;
  std::size_t solved_;
  std::vector<Int> mults_;
  std::vector<std::vector<Int>>* out_ = nullptr;
};

}  // namespace detail

/// All multiplicity vectors u in N0^p with sum u_i * gens_i == s.
/// Multiplicities are bounded by the remaining target coordinatewise; the
/// generator with the largest bound is solved for instead of looped over.
inline FactorizationSet enumerate_factorizations(std::span<const Vec2> gens, const Vec2& s) {
  if (gens.empty()) throw Error(Errc::InvalidArgument, "no generators");
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(Errc::ZeroGenerator, "generator (0,0)");
  }
  std::size_t solved = 0;
  Int widest = -1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Int b = detail::multiplicity_bound(s.as_int(), gens[i]);
    if (b > widest) {
      widest = b;
      solved = i;
    }
  }
  std::vector<std::vector<Int>> raw;
  detail::Enumerator(gens, solved).run(s.as_int(), raw);
  std::sort(raw.begin(), raw.end(), std::greater<>());

  FactorizationSet out{s, {}, {}};
  out.facts.reserve(raw.size());
  for (auto& mults : raw) {
    out.facts.emplace_back(std::move(mults), gens, s);
    out.lengths.push_back(out.facts.back().length());
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

/// max L(s) / min L(s) by enumeration.
inline ExtRat elasticity_oracle(std::span<const Vec2> gens, const Vec2& s) {
  if (s.is_zero()) throw Error(Errc::ZeroElement, "elasticity of 0 is undefined");
  auto set = enumerate_factorizations(gens, s);
  if (set.empty()) throw Error(Errc::NotMember, "(" + s.str() + ") has no factorization");
  return ExtRat(set.lengths.back(), set.lengths.front());
}

}  // namespace affmon
