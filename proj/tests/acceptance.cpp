// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "erba/carrier.hpp"
#include "erba/cli.hpp"
#include "erba/companion.hpp"
#include "erba/findim.hpp"
#include "erba/free_erba.hpp"
#include "erba/identities.hpp"

#include <iostream>
#include <sstream>

using namespace erba;

namespace {

const std::vector<Weight> standard_weights{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-3, 2}};
const std::vector<Weight> companion_weights{{0, 0}, {0, 1}, {1, 0}, {1, 1}};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome free_algebra_laws() {
  std::size_t checked = 0;
  for (const auto& w : standard_weights) {
    FreeErba a(Alphabet("xyz"), w);
    Sampler rng(1000);
    for (int i = 0; i < 500; ++i) {
      TermSum u = random_termsum(rng, a.alphabet_ptr(), 3, 3);
      TermSum v = random_termsum(rng, a.alphabet_ptr(), 3, 3);
      TermSum t = random_termsum(rng, a.alphabet_ptr(), 3, 3);
      if (!check_assoc(u, v, t, w))
        return {false, "associativity fails at " + to_string(w) + " on " + to_string(u) + ", " + to_string(v) + ", " +
                           to_string(t)};
      if (!check_erb_identity(u, v, w))
        return {false, "operator identity fails at " + to_string(w) + " on " + to_string(u) + ", " + to_string(v)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " triples over 5 weights"};
}

Outcome golden_product() {
  FreeErba a(Alphabet("xy"), {1, 1});
  std::string got = to_string(a.multiply(a.parse("[x]"), a.parse("[y]")));
  return {got == "[x[y]] + [[x]y] + [xy] + xy", "[x] * [y] = " + got};
}

Outcome derived_structures() {
  std::size_t identities = 0;
  for (const auto& w : standard_weights) {
    FreeErba a(Alphabet("xyz"), w);
    Sampler rng(2000);
    auto triples = sample_triples(rng, a.alphabet_ptr(), 200, 2, 3);
    for (const auto& name : suite_names()) {
      if (name == "assoc" || name == "erb") continue;
      SuiteResult r = run_suite(name, a, triples);
      if (!r.passed()) return {false, name + " fails at " + to_string(w) + ": " + r.failing.front()};
      identities += r.identities;
    }
  }
  return {true, std::to_string(identities) + " identities on 200 triples each (depth <= 2, breadth <= 3)"};
}

Outcome companion_spaces() {
  const std::vector<std::size_t> dims{3, 2, 1, 1};
  const std::vector<DendriformType> types{DendriformType::I, DendriformType::II, DendriformType::III,
                                          DendriformType::III};
  for (std::size_t i = 0; i < companion_weights.size(); ++i) {
    const Weight& w = companion_weights[i];
    TriCompanion t = tri_companion(w);
    if (t.basis.dimension() != 7 || !t.matches_expected)
      return {false, "tri at " + to_string(w) + ": dimension " + std::to_string(t.basis.dimension())};
    DiCompanion d = di_companion(w);
    if (d.basis.dimension() != dims[i] || d.type != types[i] ||
        echelon_basis(d.basis.vectors) != echelon_basis(expected_di_relations(w)))
      return {false, "di at " + to_string(w) + ": dimension " + std::to_string(d.basis.dimension()) + ", type " +
                         to_string(d.type)};
  }
  return {true, "tri 7/7/7/7, di 3/2/1/1 of types I/II/III/III"};
}

Outcome kernel_soundness() {
  std::size_t relations = 0;
  for (const auto& w : companion_weights) {
    FreeErba a(Alphabet("xyz"), w);
    auto b = derived_ops(a);
    Sampler rng(3000);
    std::vector<std::array<TermSum, 3>> triples;
    for (int i = 0; i < 200; ++i)
      triples.push_back({random_termsum(rng, a.alphabet_ptr(), 3, 3), random_termsum(rng, a.alphabet_ptr(), 3, 3),
                         random_termsum(rng, a.alphabet_ptr(), 3, 3)});
    for (auto mode : {CompanionMode::tri, CompanionMode::di})
      for (const auto& r : companion_basis(mode, w).vectors) {
        QuadraticIdentity id = to_identity(r, mode);
        for (const auto& t : triples)
          if (!identity_holds(a, id, t[0], t[1], t[2], b))
            return {false, relation_pretty(r, mode) + " fails at " + to_string(w)};
        ++relations;
      }
  }
  using namespace ops;
  QuadraticIdentity naive = make_identity("naive", L(prec, prec), R(prec, prec));
  for (const auto& w : standard_weights) {
    if (w.lambda == 0 && w.kappa == 0) continue;
    FreeErba a(Alphabet("xyz"), w);
    if (identity_holds(a, naive, a.letter('x'), a.letter('y'), a.letter('z'), derived_ops(a)))
      return {false, "negative control vanishes at " + to_string(w)};
  }
  return {true, std::to_string(relations) + " relations on 200 triples, negative control nonzero"};
}

Outcome sl2_golden() {
  FinDimCarrier c = sl2_example();
  if (!check_structure(c.structure())) return {false, "structure constants"};
  if (!check_erbo(c)) return {false, "operator identity"};
  if (!check_extended_postlie(c)) return {false, "post-Lie"};
  auto vec = [](Rational e, Rational f, Rational h) { return Vector{e, f, h}; };
  const std::vector<std::vector<Vector>> published{
      {vec(2, 0, 0), vec(0, -2, -2), vec(4, 0, 0)},
      {vec(Rational(3, 2), 0, -1), vec(0, Rational(-3, 2), 0), vec(0, 2, 0)},
      {vec(-2, 0, 2), vec(0, 1, Rational(-3, 2)), vec(3, -4, 0)},
  };
  auto table = cayley_table(c, TableOp::circle);
  const auto& names = c.structure().basis_names();
  std::size_t agree = 0;
  std::string mismatches;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (table[i][j] == published[i][j]) {
        ++agree;
        continue;
      }
      mismatches += "; " + names[i] + " ∘ " + names[j] + " = " + format_vector(c, table[i][j]) + ", published " +
                    format_vector(c, published[i][j]);
    }
  return {agree == 9, std::to_string(agree) + "/9 table entries" + mismatches};
}

Outcome universal_property() {
  StructureConstants sc({"r"}, AlgebraKind::associative);
  sc.set(0, 0, {1});
  FinDimCarrier line(std::move(sc), OperatorMatrix(std::vector<Vector>{Vector{1}}), {0, -1});
  FreeErba a(Alphabet("xyz"), {0, -1});
  auto f = lift(a, {{'x', line.basis(0)}, {'y', line.basis(0)}, {'z', line.basis(0)}}, line);
  auto id = lift(a, {{'x', a.letter('x')}, {'y', a.letter('y')}, {'z', a.letter('z')}}, a);
  Sampler rng(4000);
  for (int i = 0; i < 200; ++i) {
    TermSum u = random_termsum(rng, a.alphabet_ptr(), 3, 3);
    TermSum v = random_termsum(rng, a.alphabet_ptr(), 3, 3);
    if (f(a.multiply(u, v)) != line.multiply(f(u), f(v))) return {false, "product on " + to_string(u)};
    if (f(apply_p(u)) != line.apply_operator(f(u))) return {false, "operator on " + to_string(u)};
    if (!(id(u) == u) || !(id(v) == v)) return {false, "identity lift moves " + to_string(u)};
  }
  return {true, "200 pairs, identity lift fixes all samples"};
}

Outcome parser() {
  Alphabet xyz("xyz");
  Sampler rng(5000);
  for (int i = 0; i < 1000; ++i) {
    BracketedWord w = rng.word(xyz, 4, 4);
    if (!(parse_word(to_string(w), xyz) == w)) return {false, "round trip fails on " + to_string(w)};
  }
  for (std::string bad : {"", "[x][y]", "xQ"}) {
    std::ostringstream out, err;
    int code = cli::run({"mul", "--lambda", "0", "--kappa", "0", bad}, out, err);
    if (code != 2) return {false, "'" + bad + "' exits " + std::to_string(code)};
  }
  return {true, "1000 round trips, 3 grammar errors exit 2"};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"free-algebra laws", free_algebra_laws},   {"golden product", golden_product},
      {"derived structures", derived_structures}, {"companion spaces", companion_spaces},
      {"kernel soundness", kernel_soundness},     {"sl(2) table", sl2_golden},
      {"universal property", universal_property}, {"parser", parser},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
