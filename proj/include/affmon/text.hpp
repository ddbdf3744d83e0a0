#pragma once

// Text formats: a vector is "x,y"; a monoid is generator pairs separated by
// ';', e.g. "0,1;11,10;10,3". Whitespace is ignored everywhere.

#include "affmon/error.hpp"
#include "affmon/monoid.hpp"
#include "affmon/ratq.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace affmon {

namespace detail {

class PairScanner {
 public:
  explicit PairScanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  void expect(char ch) {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Int natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Vec2 pair() {
    Int x = natural();
    expect(',');
    Int y = natural();
    return Vec2(std::move(x), std::move(y));
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(Errc::SyntaxError,
                what + " at byte " + std::to_string(pos_) + ", found " + found);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Vec2 parse_vector(std::string_view text) {
  detail::PairScanner scan(text);
  Vec2 v = scan.pair();
  if (!scan.at_end()) scan.fail("trailing input");
  return v;
}

/// Any number (>= 1) of generators; callers enforce the count they need.
inline RawMonoid parse_monoid(std::string_view text) {
  detail::PairScanner scan(text);
  std::vector<Vec2> gens;
  gens.push_back(scan.pair());
  while (!scan.at_end()) {
    scan.expect(';');
    gens.push_back(scan.pair());
  }
  return RawMonoid(std::move(gens));
}

inline std::string format_monoid(std::span<const Vec2> gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ';';
    out += gens[i].str();
  }
  return out;
}

}  // namespace affmon
