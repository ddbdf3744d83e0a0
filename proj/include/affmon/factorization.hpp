#pragma once

#include "affmon/error.hpp"
#include "affmon/integer.hpp"
#include "affmon/ratq.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affmon {

/// Multiplicity vector u with sum_i u_i * gens_i == target, checked on
/// construction.
class Factorization {
 public:
  Factorization(std::vector<Int> mults, std::span<const Vec2> gens, const Vec2& target)
      : mults_(std::move(mults)) {
    if (mults_.size() != gens.size()) {
      throw Error(Errc::FactorizationMismatch, "multiplicity count differs from generator count");
    }
    Int x = 0, y = 0;
    for (std::size_t i = 0; i < mults_.size(); ++i) {
      if (mults_[i] < 0) throw Error(Errc::FactorizationMismatch, "negative multiplicity");
      x += mults_[i] * gens[i].x();
      y += mults_[i] * gens[i].y();
      length_ += mults_[i];
    }
    if (x != target.x() || y != target.y()) {
      throw Error(Errc::FactorizationMismatch,
                  "multiplicities map to (" + x.str() + "," + y.str() + "), not " +
                      "(" + target.str() + ")");
    }
  }

  const std::vector<Int>& mults() const noexcept { return mults_; }
  const Int& length() const noexcept { return length_; }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.mults_ == b.mults_;
  }

 private:
  std::vector<Int> mults_;
  Int length_ = 0;
};

enum class Reason {
  PhiOutOfRange,
  DivisibilityFails,
  XNotRepresentable,
  NoNonnegativeLift,
  OutsideQuadrant,
};

constexpr std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::PhiOutOfRange: return "PhiOutOfRange";
    case Reason::DivisibilityFails: return "DivisibilityFails";
    case Reason::XNotRepresentable: return "XNotRepresentable";
    case Reason::NoNonnegativeLift: return "NoNonnegativeLift";
    case Reason::OutsideQuadrant: return "OutsideQuadrant";
  }
  return "Unknown";
}

/// Outcome of a membership query. For members, `factorizations` holds what
/// the solver produced: the unique one, a canonical one, or all of them.
struct Membership {
  bool member = false;
  std::vector<Factorization> factorizations;
  std::optional<Reason> reason;

  static Membership yes(std::vector<Factorization> fs) { return {true, std::move(fs), {}}; }
  static Membership no(Reason r) { return {false, {}, r}; }
};

}  // namespace affmon
