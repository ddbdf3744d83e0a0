// Command-line front end: membership, factorizations and elasticities in
// affine monoids of N0^2 with two or three generators.

#include "affmon/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

struct Options {
  bool json = false;
  bool csv = false;
  bool approx = false;
  bool no_minimality_check = false;
  bool all = false;
  bool extremes = false;
  std::string k_max = "1";
};

void add_operands(CLI::App* sub, affmon::Query& q) {
  sub->add_option("monoid", q.monoid_text, "generators, e.g. \"0,1;11,10;10,3\"")->required();
  sub->add_option("vector", q.vector_text, "element, e.g. \"199,119\"")->required();
}

}  // namespace

int main(int argc, char** argv) {
  using affmon::Command;

  CLI::App app{"Exact factorization queries for affine monoids in N0^2"};
  app.require_subcommand(1);

  affmon::Query query;
  Options opt;
  app.add_flag("--json", opt.json, "emit the JSON report");
  app.add_flag("--csv", opt.csv, "emit CSV; the default for scan");
  app.add_flag("--approx", opt.approx, "print decimal approximations next to exact rationals");
  app.add_flag("--no-minimality-check", opt.no_minimality_check,
               "skip the check that no generator is a sum of the others");

  auto* check = app.add_subcommand("check", "decide membership");
  add_operands(check, query);

  auto* factorize = app.add_subcommand("factorize", "list factorizations");
  add_operands(factorize, query);
  auto* all_flag = factorize->add_flag("--all", opt.all, "every factorization (default)");
  factorize->add_flag("--extremes", opt.extremes, "only the minimal and maximal length ones")
      ->excludes(all_flag);

  auto* elasticity = app.add_subcommand("elasticity", "max length / min length");
  add_operands(elasticity, query);

  auto* limit = app.add_subcommand("limit", "limit of rho(k s) as k grows");
  add_operands(limit, query);

  auto* scan = app.add_subcommand("scan", "rho(k s) for k = 1..N next to the limit");
  add_operands(scan, query);
  scan->add_option("--k-max", opt.k_max, "largest multiple")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration, any number of generators");
  add_operands(oracle, query);

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : affmon::exit_code::input_error;
  }

  if (check->parsed()) query.command = Command::check;
  if (factorize->parsed()) query.command = Command::factorize;
  if (elasticity->parsed()) query.command = Command::elasticity;
  if (limit->parsed()) query.command = Command::limit;
  if (scan->parsed()) query.command = Command::scan;
  if (oracle->parsed()) query.command = Command::oracle;
  query.mode = opt.extremes ? affmon::FactorMode::extremes : affmon::FactorMode::all;
  query.check_minimality = !opt.no_minimality_check;
  query.approx = opt.approx;

  try {
    query.k_max = affmon::Int(opt.k_max);
  } catch (const std::exception&) {
    std::cerr << "error: --k-max must be a positive integer\n";
    return affmon::exit_code::input_error;
  }
  if (query.command == Command::scan && query.k_max < 1) {
    std::cerr << "error: --k-max must be a positive integer\n";
    return affmon::exit_code::input_error;
  }

  affmon::Report report = affmon::run(query);

  bool failed = report.body.contains("error");
  if (opt.json) {
    std::cout << report.body.dump(2) << "\n";
  } else if (!failed && !report.rows.empty()) {
    std::cout << affmon::render_csv(report.rows);
  } else {
    (failed ? std::cerr : std::cout) << affmon::render_text(report);
  }
  return report.exit_code;
}
