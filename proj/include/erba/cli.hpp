#ifndef ERBA_CLI_HPP
#define ERBA_CLI_HPP

// Command-line front end. Every subcommand parses its inputs, calls one
// library entry point and prints the result; exit codes are 0 (success),
// 1 (a mathematical check failed) and 2 (parse, usage or file error).

#include "erba/carrier.hpp"
#include "erba/companion.hpp"
#include "erba/findim.hpp"
#include "erba/free_erba.hpp"
#include "erba/identities.hpp"
#include "erba/rational.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace erba::cli {

/// Raised for input the user has to fix; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lambda, kappa;
  std::string alphabet;
  std::size_t samples = 200;
  std::size_t max_depth = 3;
  std::size_t max_breadth = 3;
  std::uint64_t seed = 0;
  std::string suite;
  std::string mode;
  std::string action;
  std::string file;
  std::string table = "circle";
  std::string expr;
  std::vector<std::string> exprs;
};

namespace detail {

inline Weight require_weight(const Options& o) {
  if (o.lambda.empty() || o.kappa.empty()) throw UsageError("--lambda and --kappa are required");
  return {parse_rational(o.lambda), parse_rational(o.kappa)};
}

inline Alphabet alphabet_or(const Options& o, std::string_view fallback) {
  return Alphabet(o.alphabet.empty() ? fallback : std::string_view(o.alphabet));
}

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline int cmd_mul(const Options& o, std::ostream& out) {
  FreeErba algebra(alphabet_or(o, "abcdefghijklmnopqrstuvwxyz"), require_weight(o));
  TermSum acc = algebra.parse(o.exprs.front());
  for (std::size_t i = 1; i < o.exprs.size(); ++i) acc = algebra.multiply(acc, algebra.parse(o.exprs[i]));
  out << to_string(acc) << "\n";
  return 0;
}

inline int cmd_bracket(const Options& o, std::ostream& out) {
  out << to_string(apply_p(parse_expression(o.expr, alphabet_or(o, "abcdefghijklmnopqrstuvwxyz")))) << "\n";
  return 0;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  FreeErba algebra(alphabet_or(o, "xyz"), require_weight(o));
  if (o.max_breadth == 0) throw UsageError("--max-breadth must be positive");
  Sampler rng(o.seed);
  auto triples = sample_triples(rng, algebra.alphabet_ptr(), o.samples, o.max_depth, o.max_breadth);
  SuiteResult r = run_suite(o.suite, algebra, triples);
  out << r.holding << "/" << r.identities << " axioms hold on " << r.samples
      << (o.suite == "erb" ? " pairs" : " triples") << "\n";
  for (const auto& name : r.failing) out << "fails: " << name << "\n";
  return r.passed() ? 0 : 1;
}

inline int cmd_companion(const Options& o, std::ostream& out) {
  Weight w = require_weight(o);
  if (o.mode == "tri") {
    out << companion_report(CompanionMode::tri, w);
    return tri_companion(w).matches_expected ? 0 : 1;
  }
  out << companion_report(CompanionMode::di, w);
  return di_companion(w).matches_expected ? 0 : 1;
}

inline void print_table(const FinDimCarrier& c, TableOp op, const std::string& symbol, std::ostream& out) {
  auto table = cayley_table(c, op);
  const auto& names = c.structure().basis_names();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      out << names[i] << " " << symbol << " " << names[j] << " = " << format_vector(c, table[i][j]) << "\n";
}

inline int report_checks(const FinDimCarrier& c, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& label, bool value) {
    out << label << ": " << (value ? "yes" : "no") << "\n";
    ok = ok && value;
  };
  line(c.kind() == AlgebraKind::lie ? "lie algebra" : "associative algebra", check_structure(c.structure()));
  line("extended Rota-Baxter operator of weight " + to_string(c.weight()), check_erbo(c));
  if (c.kind() == AlgebraKind::lie) line("extended post-Lie", check_extended_postlie(c));
  return ok ? 0 : 1;
}

inline int cmd_lie(const Options& o, std::ostream& out) {
  FinDimCarrier c = carrier_from_json(read_json(o.file));
  if (o.action == "check") return report_checks(c, out);
  if (o.table == "circle") {
    if (c.kind() != AlgebraKind::lie) throw UsageError("the circle table needs a lie carrier");
    print_table(c, TableOp::circle, "∘", out);
  } else if (o.table == "bracket") {
    print_table(c, TableOp::bracket, "[,]", out);
  } else {
    print_table(c, TableOp::product, "·", out);
  }
  return 0;
}

/// The file holds a carrier plus "assignment": {"x": {"r": "1"}, ...}.
inline int cmd_lift(const Options& o, std::ostream& out) {
  nlohmann::json j = read_json(o.file);
  FinDimCarrier c = carrier_from_json(j);
  if (c.kind() != AlgebraKind::associative) throw UsageError("lift needs an associative carrier");
  if (!j.contains("assignment")) throw UsageError("carrier file has no \"assignment\"");
  std::map<char, Vector> assignment;
  for (const auto& [key, value] : j.at("assignment").items()) {
    if (key.size() != 1) throw UsageError("assignment keys must be single letters");
    assignment[key[0]] = vector_from_json(c.structure(), value);
  }
  FreeErba source(alphabet_or(o, "abcdefghijklmnopqrstuvwxyz"), c.weight());
  TermSum s = source.parse(o.expr);
  out << format_vector(c, lift(source, assignment, c)(s)) << "\n";
  return 0;
}

inline int cmd_sl2(std::ostream& out) {
  FinDimCarrier c = sl2_example();
  int code = report_checks(c, out);
  print_table(c, TableOp::circle, "∘", out);
  return code;
}

} // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extended Rota-Baxter algebras: products, identities, companions."};
  app.name("erba");
  app.require_subcommand(1);
  auto weight_flags = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "weight λ, e.g. -3/2");
    sub->add_option("--kappa", o.kappa, "weight κ");
  };
  auto alphabet_flag = [&](CLI::App* sub) { sub->add_option("--alphabet", o.alphabet, "letters allowed in words"); };

  auto* mul = app.add_subcommand("mul", "product of expressions");
  weight_flags(mul);
  alphabet_flag(mul);
  // Expressions are collected as extras: a vector positional would make
  // CLI11 read "[x]" as a one-element list and strip the brackets.
  mul->allow_extras();

  auto* br = app.add_subcommand("bracket", "apply the operator");
  alphabet_flag(br);
  br->add_option("expr", o.expr)->required();

  auto* check = app.add_subcommand("check", "run an identity suite on random elements");
  weight_flags(check);
  alphabet_flag(check);
  check->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--samples", o.samples);
  check->add_option("--max-depth", o.max_depth);
  check->add_option("--max-breadth", o.max_breadth);
  check->add_option("--seed", o.seed);

  auto* comp = app.add_subcommand("companion", "tri- or di-companion relations");
  weight_flags(comp);
  comp->add_option("mode", o.mode)->required()->check(CLI::IsMember({"tri", "di"}));

  auto* lie = app.add_subcommand("lie", "finite-dimensional carrier from a JSON file");
  lie->add_option("action", o.action)->required()->check(CLI::IsMember({"check", "cayley"}));
  lie->add_option("file", o.file)->required();
  lie->add_option("--op", o.table, "cayley table operation")->check(CLI::IsMember({"circle", "bracket", "product"}));

  auto* lft = app.add_subcommand("lift", "evaluate an expression in a carrier");
  alphabet_flag(lft);
  lft->add_option("file", o.file)->required();
  lft->add_option("expr", o.expr)->required();

  auto* sl2 = app.add_subcommand("sl2", "the sl(2) example");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "erba: " << e.what() << "\n";
    return 2;
  }

  try {
    if (mul->parsed()) {
      o.exprs = mul->remaining();
      if (o.exprs.empty()) throw UsageError("mul needs at least one expression");
      return detail::cmd_mul(o, out);
    }
    if (br->parsed()) return detail::cmd_bracket(o, out);
    if (check->parsed()) return detail::cmd_check(o, out);
    if (comp->parsed()) return detail::cmd_companion(o, out);
    if (lie->parsed()) return detail::cmd_lie(o, out);
    if (lft->parsed()) return detail::cmd_lift(o, out);
    if (sl2->parsed()) return detail::cmd_sl2(out);
  } catch (const std::exception& e) {
    // Library errors here are all about the input: bad syntax, letters
    // outside the alphabet, mismatched dimensions, missing assignments.
    err << "erba: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace erba::cli

#endif
