#pragma once

// Query routing behind the command-line tool. A query names a command, a
// monoid and a vector; run() canonicalizes, picks the solver that applies,
// and returns a Report whose JSON form is the tool's machine-readable output.

#include "affmon/asymptotics.hpp"
#include "affmon/error.hpp"
#include "affmon/factorization.hpp"
#include "affmon/intlin.hpp"
#include "affmon/monoid.hpp"
#include "affmon/oracle.hpp"
#include "affmon/ratq.hpp"
#include "affmon/solve2.hpp"
#include "affmon/solve3.hpp"
#include "affmon/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace affmon {

using json = nlohmann::ordered_json;

enum class Command { check, factorize, elasticity, limit, scan, oracle };
enum class FactorMode { all, extremes };
enum class Solver { dim2_theorem, dim3_star_theorem, dim3_general, oracle };

constexpr std::string_view to_string(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::factorize: return "factorize";
    case Command::elasticity: return "elasticity";
    case Command::limit: return "limit";
    case Command::scan: return "scan";
    case Command::oracle: return "oracle";
  }
  return "unknown";
}

constexpr std::string_view to_string(Solver s) {
  switch (s) {
    case Solver::dim2_theorem: return "dim2-theorem";
    case Solver::dim3_star_theorem: return "dim3-star-theorem";
    case Solver::dim3_general: return "dim3-general";
    case Solver::oracle: return "oracle";
  }
  return "unknown";
}

struct Query {
  Command command = Command::check;
  std::string monoid_text;
  std::string vector_text;
  Int k_max = 1;
  FactorMode mode = FactorMode::all;
  bool check_minimality = true;
  bool approx = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int not_member = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

struct Report {
  Command command = Command::check;
  json body;
  std::optional<Solver> solver;
  bool star = false;
  std::vector<ScanRow> rows;  // scan only
  int exit_code = exit_code::ok;
};

namespace detail {

// Integers that fit in int64 are JSON numbers; larger ones are strings.
inline json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline json rat_json(const ExtRat& r, bool approx) {
  if (!approx) return r.str();
  return json{{"exact", r.str()}, {"approx", r.approx()}};
}

inline json gens_json(std::span<const Vec2> gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(json::array({int_json(g.x()), int_json(g.y())}));
  return out;
}

template <std::size_t N>
json factorization_json(const Factorization& f, const std::array<std::size_t, N>& source) {
  json mults = json::array();
  std::vector<Int> original(N);
  for (std::size_t i = 0; i < N; ++i) {
    mults.push_back(int_json(f.mults()[i]));
    original[source[i]] = f.mults()[i];
  }
  json orig = json::array();
  for (const auto& v : original) orig.push_back(int_json(v));
  return {{"mults", mults}, {"original_order", orig}, {"length", int_json(f.length())}};
}

inline json plain_factorization_json(const Factorization& f) {
  json mults = json::array();
  for (const auto& v : f.mults()) mults.push_back(int_json(v));
  return {{"mults", mults}, {"length", int_json(f.length())}};
}

inline json transform_json(const UniMat2& u) {
  return json::array({json::array({int_json(u(0, 0)), int_json(u(0, 1))}),
                      json::array({int_json(u(1, 0)), int_json(u(1, 1))})});
}

template <class Monoid>
json monoid_json(const RawMonoid& raw, const Monoid& m) {
  auto gens = m.gens();
  json j{{"generators", gens_json(raw.gens())},
         {"canonical", gens_json(gens)},
         {"star", false},
         {"transform", transform_json(m.transform())},
         {"source", m.source()}};
  if constexpr (std::is_same_v<Monoid, CanonicalMonoid3>) j["star"] = m.star();
  return j;
}

inline json lengths_json(std::vector<Int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  json out = json::array();
  for (const auto& l : lengths) out.push_back(int_json(l));
  return out;
}

inline Report error_report(Command cmd, const Error& e) {
  Report r;
  r.command = cmd;
  r.body = {{"command", std::string(to_string(cmd))},
            {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
  r.exit_code = e.code() == Errc::NotMember ? exit_code::not_member : exit_code::input_error;
  return r;
}

inline void set_not_member(Report& r, json& result, Reason reason) {
  result["verdict"] = "not_member";
  result["reason"] = std::string(to_string(reason));
  r.exit_code = exit_code::not_member;
}

class Router {
 public:
  Router(const Query& q, Report& r) : q_(q), r_(r) {}

  void operator()(const CanonicalMonoid2& m);
  void operator()(const CanonicalMonoid3& m);

  const RawMonoid* raw = nullptr;
  Vec2 input;

 private:
  const Query& q_;
  Report& r_;
};

inline void Router::operator()(const CanonicalMonoid2& m) {
  r_.body["monoid"] = monoid_json(*raw, m);
  r_.solver = Solver::dim2_theorem;
  json result = json::object();
  auto s = m.to_canonical(input);
  r_.body["canonical_input"] = s ? json(s->str()) : json(nullptr);

  if (q_.command == Command::limit || q_.command == Command::scan) {
    throw Error(Errc::StarRequired, "limit and scan need three generators with bc - ad = 1");
  }
  auto mem = s ? member2(m, *s) : Membership::no(Reason::OutsideQuadrant);
  if (!mem.member) {
    set_not_member(r_, result, *mem.reason);
  } else {
    result["verdict"] = "member";
    const auto& f = mem.factorizations.front();
    switch (q_.command) {
      case Command::check:
        result["factorization"] = factorization_json(f, m.source());
        break;
      case Command::factorize:
        result["mode"] = q_.mode == FactorMode::all ? "all" : "extremes";
        result["factorizations"] = json::array({factorization_json(f, m.source())});
        result["lengths"] = json::array({int_json(f.length())});
        break;
      case Command::elasticity:
        result["elasticity"] = rat_json(elasticity2(m, *s), q_.approx);
        result["min_length"] = int_json(f.length());
        result["max_length"] = int_json(f.length());
        break;
      default:
        break;
    }
  }
  if (q_.command == Command::check && s) {
    result["d2_test"] = std::string(to_string(d2_test(m.matrix(), *s)));
  }
  r_.body["result"] = result;
}

inline void Router::operator()(const CanonicalMonoid3& m) {
  r_.body["monoid"] = monoid_json(*raw, m);
  r_.star = m.star();
  json result = json::object();
  auto s = m.to_canonical(input);
  r_.body["canonical_input"] = s ? json(s->str()) : json(nullptr);
  const auto gens = m.gens();

  auto factorization_list = [&](const std::vector<Factorization>& fs) {
    json out = json::array();
    std::vector<Int> lengths;
    for (const auto& f : fs) {
      out.push_back(factorization_json(f, m.source()));
      lengths.push_back(f.length());
    }
    result["factorizations"] = out;
    result["lengths"] = lengths_json(lengths);
  };

  switch (q_.command) {
    case Command::check: {
      r_.solver = m.star() ? Solver::dim3_star_theorem : Solver::dim3_general;
      Membership mem = !s ? Membership::no(Reason::OutsideQuadrant)
                          : (m.star() ? member3_star(m, *s) : member3_general(m, *s));
      if (mem.member) {
        result["verdict"] = "member";
        result["factorization"] = factorization_json(mem.factorizations.front(), m.source());
      } else {
        set_not_member(r_, result, *mem.reason);
      }
      if (s) result["d2_test"] = std::string(to_string(d2_test(m.matrix(), *s)));
      break;
    }
    case Command::factorize: {
      result["mode"] = q_.mode == FactorMode::all ? "all" : "extremes";
      r_.solver = m.star() ? Solver::dim3_star_theorem : Solver::dim3_general;
      Membership mem = !s ? Membership::no(Reason::OutsideQuadrant)
                          : (m.star() ? member3_star(m, *s) : member3_general(m, *s));
      if (!mem.member) {
        set_not_member(r_, result, *mem.reason);
        break;
      }
      result["verdict"] = "member";
      if (m.star()) {
        if (q_.mode == FactorMode::all) {
          factorization_list(factorizations_star(m, *s));
        } else if (s->is_zero()) {
          factorization_list(mem.factorizations);
        } else {
          auto ext = extreme_factorizations(m, *s);
          factorization_list({ext.t_zero, ext.t_max});
          result["t_max"] = int_json(ext.t_max_value);
          result["branch"] = std::string(to_string(ext.branch));
        }
      } else {
        auto& all = mem.factorizations;
        if (q_.mode == FactorMode::all) {
          factorization_list(all);
        } else {
          auto [lo, hi] = std::minmax_element(all.begin(), all.end(), [](const auto& l, const auto& r) {
            return l.length() < r.length();
          });
          factorization_list({*lo, *hi});
        }
      }
      break;
    }
    case Command::elasticity: {
      if (s && s->is_zero()) throw Error(Errc::ZeroElement, "elasticity of 0 is undefined");
      if (m.star()) {
        r_.solver = Solver::dim3_star_theorem;
        Membership mem = s ? member3_star(m, *s) : Membership::no(Reason::OutsideQuadrant);
        if (!mem.member) {
          set_not_member(r_, result, *mem.reason);
          break;
        }
        auto ext = extreme_factorizations(m, *s);
        result["verdict"] = "member";
        result["elasticity"] = rat_json(elasticity3(m, *s), q_.approx);
        result["min_length"] = int_json(std::min(ext.len_zero, ext.len_max));
        result["max_length"] = int_json(std::max(ext.len_zero, ext.len_max));
        result["tau"] = tau(m);
      } else {
        r_.solver = Solver::oracle;
        if (!s) {
          set_not_member(r_, result, Reason::OutsideQuadrant);
          break;
        }
        auto set = enumerate_factorizations(gens, *s);
        if (set.empty()) {
          set_not_member(r_, result, Reason::NoNonnegativeLift);
          break;
        }
        result["verdict"] = "member";
        result["elasticity"] = rat_json(elasticity_oracle(gens, *s), q_.approx);
        result["min_length"] = int_json(set.lengths.front());
        result["max_length"] = int_json(set.lengths.back());
      }
      break;
    }
    case Command::limit:
    case Command::scan: {
      if (!m.star()) throw Error(Errc::StarRequired, "limit and scan need bc - ad = 1");
      r_.solver = Solver::dim3_star_theorem;
      if (s && s->is_zero()) throw Error(Errc::ZeroElement, "multiples of 0 have no elasticity");
      Membership mem = s ? member3_star(m, *s) : Membership::no(Reason::OutsideQuadrant);
      if (!mem.member) {
        set_not_member(r_, result, *mem.reason);
        break;
      }
      result["verdict"] = "member";
      auto lim = rho_limit(m, *s);
      result["tau"] = lim.lft.tau;
      result["branch"] = std::string(to_string(lim.branch));
      result["lft"] = {{"p", int_json(lim.lft.p)},
                       {"q", int_json(lim.lft.q)},
                       {"r", int_json(lim.lft.r)},
                       {"t", int_json(lim.lft.t)}};
      result["limit"] = rat_json(lim.value, q_.approx);
      if (q_.command == Command::scan) {
        r_.rows = scan_multiples(m, *s, q_.k_max);
        json rows = json::array();
        for (const auto& row : r_.rows) {
          rows.push_back({{"k", int_json(row.k)},
                          {"rho_exact", rat_json(row.rho_exact, q_.approx)},
                          {"rho_limit", rat_json(row.rho_limit, q_.approx)},
                          {"gap", rat_json(row.gap, q_.approx)}});
        }
        result["k_max"] = int_json(q_.k_max);
        result["rows"] = rows;
      }
      break;
    }
    case Command::oracle:
      break;
  }
  r_.body["result"] = result;
}

inline void run_oracle(const Query& q, const RawMonoid& raw, const Vec2& s, Report& r) {
  r.solver = Solver::oracle;
  r.body["monoid"] = {{"generators", gens_json(raw.gens())}};
  auto set = enumerate_factorizations(raw.gens(), s);
  json result = json::object();
  if (set.empty()) {
    result["verdict"] = "not_member";
    r.exit_code = exit_code::not_member;
  } else {
    result["verdict"] = "member";
    json facts = json::array();
    for (const auto& f : set.facts) facts.push_back(plain_factorization_json(f));
    result["factorizations"] = facts;
    result["lengths"] = lengths_json(set.lengths);
    result["elasticity"] = s.is_zero() ? json(nullptr) : rat_json(elasticity_oracle(raw.gens(), s), q.approx);
  }
  r.body["result"] = result;
}

}  // namespace detail

/// Never throws for bad input; errors come back as a report with a code and
/// exit status 2 (1 for NotMember).
inline Report run(const Query& q) {
  Report r;
  r.command = q.command;
  try {
    RawMonoid raw = parse_monoid(q.monoid_text);
    Vec2 s = parse_vector(q.vector_text);
    r.body = {{"command", std::string(to_string(q.command))}, {"input", s.str()}};
    if (q.command == Command::oracle) {
      detail::run_oracle(q, raw, s, r);
    } else {
      auto m = canonicalize(raw, q.check_minimality ? Minimality::check : Minimality::skip);
      detail::Router router(q, r);
      router.raw = &raw;
      router.input = s;
      std::visit(router, m);
    }
    r.body["solver_used"] = r.solver ? json(std::string(to_string(*r.solver))) : json(nullptr);
  } catch (const Error& e) {
    return detail::error_report(q.command, e);
  }
  return r;
}

/// "k,rho_exact,rho_limit,gap" with exact rationals.
inline std::string render_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "k,rho_exact,rho_limit,gap\n";
  for (const auto& row : rows) {
    out << row.k << ',' << row.rho_exact << ',' << row.rho_limit << ',' << row.gap << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("exact")) {
    std::ostringstream o;
    o << v["exact"].get<std::string>() << " (~" << v["approx"].get<double>() << ")";
    return o.str();
  }
  return v.dump();
}

}  // namespace detail

/// Human-readable rendering: one "key: value" line per field.
inline std::string render_text(const Report& r) {
  std::ostringstream out;
  const json& b = r.body;
  if (b.contains("error")) {
    out << "error: " << b["error"]["code"].get<std::string>() << "\n"
        << b["error"]["message"].get<std::string>() << "\n";
    return out.str();
  }
  if (b.contains("monoid")) {
    const json& m = b["monoid"];
    out << "monoid: " << m["generators"].dump() << "\n";
    if (m.contains("canonical")) {
      out << "canonical: " << m["canonical"].dump() << "  star: " << (m["star"].get<bool>() ? "yes" : "no")
          << "  transform: " << m["transform"].dump() << "\n";
    }
  }
  out << "input: " << b["input"].get<std::string>() << "\n";
  if (b.contains("canonical_input") && !b["canonical_input"].is_null()) {
    out << "canonical input: " << b["canonical_input"].get<std::string>() << "\n";
  }
  out << "solver: " << detail::scalar_text(b["solver_used"]) << "\n";
  for (const auto& [key, value] : b["result"].items()) {
    if (key == "rows") continue;
    if (key == "factorizations") {
      out << "factorizations:\n";
      for (const auto& f : value) {
        out << "  " << f["mults"].dump() << "  length " << f["length"].dump() << "\n";
      }
      continue;
    }
    out << key << ": " << detail::scalar_text(value) << "\n";
  }
  return out.str();
}

}  // namespace affmon
