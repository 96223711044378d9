#ifndef ERBA_IDENTITIES_HPP
#define ERBA_IDENTITIES_HPP

// Binary operations derived from an extended Rota-Baxter operator and the
// arity-3 identities they satisfy. Identities are plain data; a single
// evaluator serves every axiom family.

#include "erba/carrier.hpp"
#include "erba/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace erba {

/// Name of a binary operation. The predefined names are the ones the
/// derived structures bind; any other name is user-defined.
struct OpSymbol {
  std::string name;

  friend auto operator<=>(const OpSymbol&, const OpSymbol&) = default;
};

namespace ops {
inline const OpSymbol prec{"prec"};
inline const OpSymbol succ{"succ"};
inline const OpSymbol dot{"dot"};
inline const OpSymbol circ{"circ"};
inline const OpSymbol lbrk{"lbrk"};
inline const OpSymbol tril{"tril"};
inline const OpSymbol trir{"trir"};
inline const OpSymbol star{"star"};
inline const OpSymbol brace{"brace"};
} // namespace ops

inline std::string glyph(const OpSymbol& s) {
  static const std::map<std::string, std::string> glyphs{
      {"prec", "≺"}, {"succ", "≻"}, {"dot", "⊙"}, {"circ", "∘"}, {"lbrk", "[,]"},
      {"tril", "⊳"}, {"trir", "⊲"}, {"star", "⋆"}, {"brace", "{,}"}};
  auto it = glyphs.find(s.name);
  return it == glyphs.end() ? s.name : it->second;
}

enum class Assoc { left, right };

/// Argument order for a monomial: positions of x, y, z. {0,1,2} is (x,y,z).
using ArgOrder = std::array<int, 3>;
inline constexpr ArgOrder xyz{0, 1, 2};

/// ((a first b) second c) or (a first (b second c)) with (a,b,c) the
/// arguments permuted by `args`.
struct Arity3Monomial {
  Assoc side = Assoc::left;
  OpSymbol first_op;
  OpSymbol second_op;
  ArgOrder args = xyz;

  friend auto operator<=>(const Arity3Monomial&, const Arity3Monomial&) = default;
};

/// Formal linear combination of binary operation symbols, e.g. ≺ + ≻ + λ⊙.
struct LinearOp {
  std::vector<std::pair<Rational, OpSymbol>> terms;

  LinearOp() = default;
  LinearOp(const OpSymbol& s) : terms{{Rational(1), s}} {} // NOLINT: implicit by design of the builder
};

inline LinearOp operator+(LinearOp a, const LinearOp& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}
inline LinearOp operator*(const Rational& c, LinearOp a) {
  for (auto& t : a.terms) t.first *= c;
  return a;
}

/// ⋆_λ = ≺ + ≻ + λ⊙.
inline LinearOp star_lambda_op(const Weight& w) { return ops::prec + ops::succ + w.lambda * LinearOp(ops::dot); }
/// ⋆ = ≺ + ≻.
inline LinearOp star_op() { return ops::prec + ops::succ; }

/// Linear combination of monomials; the building block of identities.
struct MonomialSum {
  std::vector<std::pair<Rational, Arity3Monomial>> terms;
};

inline MonomialSum operator+(MonomialSum a, const MonomialSum& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}
inline MonomialSum operator*(const Rational& c, MonomialSum a) {
  for (auto& t : a.terms) t.first *= c;
  return a;
}
inline MonomialSum operator-(MonomialSum a) { return Rational(-1) * std::move(a); }
inline MonomialSum operator-(MonomialSum a, const MonomialSum& b) { return std::move(a) + (-b); }

/// (u a v) b w, expanded bilinearly.
inline MonomialSum L(const LinearOp& a, const LinearOp& b, ArgOrder args = xyz) {
  MonomialSum s;
  for (const auto& [ca, sa] : a.terms)
    for (const auto& [cb, sb] : b.terms) s.terms.push_back({ca * cb, {Assoc::left, sa, sb, args}});
  return s;
}

/// u a (v b w), expanded bilinearly.
inline MonomialSum R(const LinearOp& a, const LinearOp& b, ArgOrder args = xyz) {
  MonomialSum s;
  for (const auto& [ca, sa] : a.terms)
    for (const auto& [cb, sb] : b.terms) s.terms.push_back({ca * cb, {Assoc::right, sa, sb, args}});
  return s;
}

/// Asserts Σ c_i · monomial_i(x, y, z) = 0 for all x, y, z. Like monomials
/// are merged and zero coefficients dropped.
struct QuadraticIdentity {
  std::string name;
  std::vector<std::pair<Rational, Arity3Monomial>> terms;
};

/// The identity lhs = rhs, stored as lhs − rhs.
inline QuadraticIdentity make_identity(std::string name, const MonomialSum& lhs, const MonomialSum& rhs) {
  std::map<Arity3Monomial, Rational> merged;
  for (const auto& [c, m] : lhs.terms) merged[m] += c;
  for (const auto& [c, m] : rhs.terms) merged[m] -= c;
  QuadraticIdentity id{std::move(name), {}};
  for (auto& [m, c] : merged)
    if (c != 0) id.terms.emplace_back(c, m);
  return id;
}

class UnboundSymbol : public std::out_of_range {
public:
  explicit UnboundSymbol(const OpSymbol& s) : std::out_of_range("operation '" + s.name + "' is not bound") {}
};

/// Symbol name -> bilinear operation on the carrier's values.
template <class V>
using Bindings = std::map<std::string, std::function<V(const V&, const V&)>>;

template <class V>
const std::function<V(const V&, const V&)>& lookup(const Bindings<V>& b, const OpSymbol& s) {
  auto it = b.find(s.name);
  if (it == b.end()) throw UnboundSymbol(s);
  return it->second;
}

/// Σ c_i · monomial_i(x, y, z); zero iff the identity holds on this triple.
template <LinearCarrier C>
typename C::value_type eval_identity(const C& carrier, const QuadraticIdentity& id, const typename C::value_type& x,
                                     const typename C::value_type& y, const typename C::value_type& z,
                                     const Bindings<typename C::value_type>& bindings) {
  using V = typename C::value_type;
  const std::array<const V*, 3> args{&x, &y, &z};
  V out = carrier.zero();
  for (const auto& [c, m] : id.terms) {
    const auto& first = lookup(bindings, m.first_op);
    const auto& second = lookup(bindings, m.second_op);
    const V& a = *args[m.args[0]];
    const V& b = *args[m.args[1]];
    const V& d = *args[m.args[2]];
    V value = m.side == Assoc::left ? second(first(a, b), d) : first(a, second(b, d));
    out = carrier.add(out, carrier.scale(c, value));
  }
  return out;
}

template <LinearCarrier C>
bool identity_holds(const C& carrier, const QuadraticIdentity& id, const typename C::value_type& x,
                    const typename C::value_type& y, const typename C::value_type& z,
                    const Bindings<typename C::value_type>& bindings) {
  return carrier.is_zero(eval_identity(carrier, id, x, y, z, bindings));
}

// ---- axiom suites -------------------------------------------------------

/// The seven extended tridendriform relations at weight (λ, κ).
inline std::vector<QuadraticIdentity> etd_axioms(const Weight& w) {
  using namespace ops;
  const LinearOp star = star_lambda_op(w);
  const Rational& k = w.kappa;
  return {
      make_identity("e1", L(prec, prec), R(prec, star) + k * R(dot, dot)),
      make_identity("e2", L(succ, prec), R(succ, prec)),
      make_identity("e3", L(star, succ) + k * L(dot, dot), R(succ, succ)),
      make_identity("e4", L(succ, dot), R(succ, dot)),
      make_identity("e5", L(prec, dot), R(dot, succ)),
      make_identity("e6", L(dot, prec), R(dot, prec)),
      make_identity("e7", L(dot, dot), R(dot, dot)),
  };
}

/// The two extended dendriform relations, ⋆ = ≺ + ≻.
inline std::vector<QuadraticIdentity> ed_axioms() {
  using namespace ops;
  const LinearOp star = star_op();
  return {
      make_identity("ed1", L(prec, prec) + L(star, succ), R(prec, star) + R(succ, succ)),
      make_identity("ed2", L(succ, prec), R(succ, prec)),
  };
}

/// The three dendriform relations.
inline std::vector<QuadraticIdentity> dendriform_axioms() {
  using namespace ops;
  const LinearOp star = star_op();
  return {
      make_identity("dd1", L(prec, prec), R(prec, star)),
      make_identity("dd2", L(succ, prec), R(succ, prec)),
      make_identity("dd3", L(star, succ), R(succ, succ)),
  };
}

/// Extended post-Lie compatibilities for (∘, [,]) at weight (λ, κ).
inline std::vector<QuadraticIdentity> post_lie_axioms(const Weight& w) {
  using namespace ops;
  constexpr ArgOrder yxz{1, 0, 2};
  return {
      make_identity("post1",
                    L(circ, circ) - L(circ, circ, yxz) + w.lambda * L(lbrk, circ) + w.kappa * L(lbrk, lbrk),
                    R(circ, circ) - R(circ, circ, yxz)),
      make_identity("post2", R(circ, lbrk), L(circ, lbrk) + R(lbrk, circ, yxz)),
  };
}

/// Extended pre-Lie identities for (⊳, ⊲, ∘), ∗ = ⊳ + ⊲.
inline std::vector<QuadraticIdentity> extended_pre_lie_axioms() {
  using namespace ops;
  const LinearOp ast = tril + trir;
  constexpr ArgOrder yxz{1, 0, 2};
  constexpr ArgOrder zyx{2, 1, 0};
  constexpr ArgOrder zxy{2, 0, 1};
  return {
      make_identity("epre1", L(tril, tril) - R(tril, ast) + L(ast, trir) - R(trir, trir),
                    L(tril, tril, yxz) - R(tril, ast, yxz) + L(ast, trir, yxz) - R(trir, trir, yxz)),
      make_identity("epre2",
                    L(circ, circ) - R(circ, circ) + L(tril, tril) - R(tril, ast) + R(trir, trir, zyx) -
                        L(ast, trir, zyx),
                    L(circ, circ, yxz) - R(circ, circ, yxz) + L(tril, tril, yxz) - R(tril, ast, yxz) +
                        R(trir, trir, zxy) - L(ast, trir, zxy)),
  };
}

/// (x∘y)∘z − x∘(y∘z) = (y∘x)∘z − y∘(x∘z).
inline QuadraticIdentity pre_lie_identity(const OpSymbol& s = ops::circ) {
  constexpr ArgOrder yxz{1, 0, 2};
  return make_identity("pre-lie", L(s, s) - R(s, s), L(s, s, yxz) - R(s, s, yxz));
}

/// [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
inline QuadraticIdentity jacobi_identity(const OpSymbol& s) {
  return make_identity("jacobi(" + s.name + ")", L(s, s) + L(s, s, {1, 2, 0}) + L(s, s, {2, 0, 1}), {});
}

/// (x s y) s z = x s (y s z) for a composite operation s.
inline QuadraticIdentity associativity(std::string name, const LinearOp& s) {
  return make_identity(std::move(name), L(s, s), R(s, s));
}

// ---- derived operations -------------------------------------------------

/// x ≺ y = xP(y), x ≻ y = P(x)y, x ⊙ y = xy.
template <ErbaCarrier C>
Bindings<typename C::value_type> derived_ops(const C& c) {
  using V = typename C::value_type;
  return {
      {ops::prec.name, [c](const V& x, const V& y) { return c.multiply(x, c.apply_operator(y)); }},
      {ops::succ.name, [c](const V& x, const V& y) { return c.multiply(c.apply_operator(x), y); }},
      {ops::dot.name, [c](const V& x, const V& y) { return c.multiply(x, y); }},
  };
}

/// x ≺' y = xP(y) + λxy, x ≻' y = P(x)y.
template <ErbaCarrier C>
Bindings<typename C::value_type> derived_ed_ops(const C& c) {
  using V = typename C::value_type;
  return {
      {ops::prec.name,
       [c](const V& x, const V& y) {
         return c.add(c.multiply(x, c.apply_operator(y)), c.scale(Weight(c.weight()).lambda, c.multiply(x, y)));
       }},
      {ops::succ.name, [c](const V& x, const V& y) { return c.multiply(c.apply_operator(x), y); }},
  };
}

/// x ⋆_λ y = x≺y + x≻y + λ x⊙y. With λ = 0 and no ⊙ bound this is ⋆ = ≺ + ≻.
template <LinearCarrier C>
typename C::value_type star_lambda(const C& c, const typename C::value_type& x, const typename C::value_type& y,
                                   const Bindings<typename C::value_type>& b, const Rational& lambda) {
  auto out = c.add(lookup(b, ops::prec)(x, y), lookup(b, ops::succ)(x, y));
  if (lambda != 0) out = c.add(out, c.scale(lambda, lookup(b, ops::dot)(x, y)));
  return out;
}

/// [x,y] = x⊙y − y⊙x and x∘y = x≻y − y≺x.
template <LinearCarrier C>
Bindings<typename C::value_type> post_lie_from_etd(const C& c, const Bindings<typename C::value_type>& b) {
  using V = typename C::value_type;
  auto dot = lookup(b, ops::dot);
  auto prec = lookup(b, ops::prec);
  auto succ = lookup(b, ops::succ);
  return {
      {ops::lbrk.name, [c, dot](const V& x, const V& y) { return subtract(c, dot(x, y), dot(y, x)); }},
      {ops::circ.name, [c, prec, succ](const V& x, const V& y) { return subtract(c, succ(x, y), prec(y, x)); }},
  };
}

/// {x,y} = x∘y − y∘x + λ[x,y], bound as `brace`.
template <LinearCarrier C>
Bindings<typename C::value_type> lie_from_postlie(const C& c, const Bindings<typename C::value_type>& b,
                                                  const Weight& w) {
  using V = typename C::value_type;
  auto circ = lookup(b, ops::circ);
  auto lbrk = lookup(b, ops::lbrk);
  Rational lambda = w.lambda;
  return {{ops::brace.name, [c, circ, lbrk, lambda](const V& x, const V& y) {
             return c.add(subtract(c, circ(x, y), circ(y, x)), c.scale(lambda, lbrk(x, y)));
           }}};
}

/// x⊳y = x≺y, x⊲y = x≻y, x∘y = x≻y − y≺x.
template <LinearCarrier C>
Bindings<typename C::value_type> pre_lie_from_ed(const C& c, const Bindings<typename C::value_type>& b) {
  using V = typename C::value_type;
  auto prec = lookup(b, ops::prec);
  auto succ = lookup(b, ops::succ);
  return {
      {ops::tril.name, prec},
      {ops::trir.name, succ},
      {ops::circ.name, [c, prec, succ](const V& x, const V& y) { return subtract(c, succ(x, y), prec(y, x)); }},
  };
}

/// [x,y] = x∘y − y∘x, bound as `lbrk`.
template <LinearCarrier C>
Bindings<typename C::value_type> lie_from_prelie(const C& c, const Bindings<typename C::value_type>& b) {
  using V = typename C::value_type;
  auto circ = lookup(b, ops::circ);
  return {{ops::lbrk.name, [c, circ](const V& x, const V& y) { return subtract(c, circ(x, y), circ(y, x)); }}};
}

template <LinearCarrier C>
bool is_skew(const C& c, const std::function<typename C::value_type(const typename C::value_type&,
                                                                    const typename C::value_type&)>& op,
             const typename C::value_type& x, const typename C::value_type& y) {
  return c.is_zero(c.add(op(x, y), op(y, x)));
}

/// Both squares of the extended diagram on (x, y): the ⋆_λ commutator equals
/// the post-Lie bracket {x,y}, and the ⋆' commutator of the dendriform-side
/// operations equals the pre-Lie commutator.
template <ErbaCarrier C>
bool diagram_commutes(const C& c, const typename C::value_type& x, const typename C::value_type& y) {
  const Weight w = c.weight();
  auto etd = derived_ops(c);
  auto via_assoc = subtract(c, star_lambda(c, x, y, etd, w.lambda), star_lambda(c, y, x, etd, w.lambda));
  auto brace = lookup(lie_from_postlie(c, post_lie_from_etd(c, etd), w), ops::brace);
  if (!equal(c, via_assoc, brace(x, y))) return false;

  auto ed = derived_ed_ops(c);
  auto via_assoc_ed = subtract(c, star_lambda(c, x, y, ed, 0), star_lambda(c, y, x, ed, 0));
  auto bracket = lookup(lie_from_prelie(c, pre_lie_from_ed(c, ed)), ops::lbrk);
  return equal(c, via_assoc_ed, bracket(x, y));
}

// ---- named suites -------------------------------------------------------

/// Outcome of running a named suite over sampled triples.
struct SuiteResult {
  std::string suite;
  std::size_t identities = 0;
  std::size_t holding = 0;
  std::size_t samples = 0;
  std::vector<std::string> failing;

  bool passed() const { return holding == identities; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"assoc",   "erb",        "etd",    "ed",     "post-lie",
                                              "pre-lie", "star-assoc", "jacobi", "diagram"};
  return names;
}

/// Runs the suite `name` on the derived structures of `c` for every triple.
/// "erb" uses the first two entries of each triple. Throws
/// std::invalid_argument on an unknown suite name.
template <ErbaCarrier C>
SuiteResult run_suite(const std::string& name, const C& c,
                      const std::vector<std::array<typename C::value_type, 3>>& triples) {
  using V = typename C::value_type;
  const Weight w = c.weight();
  SuiteResult result{name, 0, 0, triples.size(), {}};

  auto tally = [&](const std::string& label, auto&& holds_on) {
    ++result.identities;
    for (const auto& t : triples) {
      if (!holds_on(t)) {
        result.failing.push_back(label);
        return;
      }
    }
    ++result.holding;
  };
  auto tally_identities = [&](const std::vector<QuadraticIdentity>& ids, const Bindings<V>& b) {
    for (const auto& id : ids)
      tally(id.name, [&](const auto& t) { return identity_holds(c, id, t[0], t[1], t[2], b); });
  };

  if (name == "assoc") {
    Bindings<V> b{{ops::dot.name, [c](const V& x, const V& y) { return c.multiply(x, y); }}};
    tally_identities({associativity("assoc", ops::dot)}, b);
  } else if (name == "erb") {
    tally("erb", [&](const auto& t) { return holds_erb_identity(c, t[0], t[1]); });
  } else if (name == "etd") {
    tally_identities(etd_axioms(w), derived_ops(c));
  } else if (name == "ed") {
    tally_identities(ed_axioms(), derived_ed_ops(c));
  } else if (name == "post-lie") {
    tally_identities(post_lie_axioms(w), post_lie_from_etd(c, derived_ops(c)));
  } else if (name == "pre-lie") {
    tally_identities(extended_pre_lie_axioms(), pre_lie_from_ed(c, derived_ed_ops(c)));
  } else if (name == "star-assoc") {
    tally_identities({associativity("star-lambda", star_lambda_op(w))}, derived_ops(c));
    tally_identities({associativity("star", star_op())}, derived_ed_ops(c));
  } else if (name == "jacobi") {
    auto brace = lie_from_postlie(c, post_lie_from_etd(c, derived_ops(c)), w);
    auto bracket = lie_from_prelie(c, pre_lie_from_ed(c, derived_ed_ops(c)));
    tally("jacobi(post-lie)", [&](const auto& t) {
      return identity_holds(c, jacobi_identity(ops::brace), t[0], t[1], t[2], brace) &&
             is_skew(c, lookup(brace, ops::brace), t[0], t[1]);
    });
    tally("jacobi(pre-lie)", [&](const auto& t) {
      return identity_holds(c, jacobi_identity(ops::lbrk), t[0], t[1], t[2], bracket) &&
             is_skew(c, lookup(bracket, ops::lbrk), t[0], t[1]);
    });
  } else if (name == "diagram") {
    tally("diagram", [&](const auto& t) {
      return diagram_commutes(c, t[0], t[1]) && diagram_commutes(c, t[1], t[2]);
    });
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return result;
}

} // namespace erba

#endif
