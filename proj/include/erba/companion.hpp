#ifndef ERBA_COMPANION_HPP
#define ERBA_COMPANION_HPP

// Binary quadratic relations satisfied by the operator-derived operations.
// Every arity-3 monomial is evaluated in the free algebra on {x, y, z}; the
// relation space is the exact kernel of the resulting coefficient matrix.

#include "erba/free_erba.hpp"
#include "erba/identities.hpp"
#include "erba/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace erba {

enum class CompanionMode { tri, di };

inline std::string to_string(CompanionMode m) { return m == CompanionMode::tri ? "tri" : "di"; }

using Matrix = std::vector<std::vector<Rational>>;
/// Coefficients over the monomial basis of `monomial_basis(mode)`: all
/// left-associated pairs first, then all right-associated pairs.
using RelationVector = std::vector<Rational>;

/// Generators in basis order: ≺, ≻ and, in tri mode, ⊙.
inline std::vector<OpSymbol> generators(CompanionMode mode) {
  if (mode == CompanionMode::tri) return {ops::prec, ops::succ, ops::dot};
  return {ops::prec, ops::succ};
}

/// (x a y) b z for all (a, b) in generator order, then x a (y b z). Length
/// 18 in tri mode, 8 in di mode.
inline std::vector<Arity3Monomial> monomial_basis(CompanionMode mode) {
  std::vector<Arity3Monomial> out;
  for (Assoc side : {Assoc::left, Assoc::right})
    for (const auto& a : generators(mode))
      for (const auto& b : generators(mode)) out.push_back({side, a, b, xyz});
  return out;
}

inline std::size_t monomial_index(CompanionMode mode, const Arity3Monomial& m) {
  auto basis = monomial_basis(mode);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return i;
  throw std::invalid_argument("monomial is outside the " + to_string(mode) + "-mode basis");
}

/// The monomial in the free algebra on {x, y, z} at `weight`, with
/// ≺ ↦ xP(y), ≻ ↦ P(x)y, ⊙ ↦ xy.
inline TermSum evaluate_monomial(const Arity3Monomial& m, CompanionMode mode, const Weight& weight) {
  auto gens = generators(mode);
  for (const auto& s : {m.first_op, m.second_op})
    if (std::find(gens.begin(), gens.end(), s) == gens.end())
      throw std::invalid_argument("symbol '" + s.name + "' is not a " + to_string(mode) + "-mode generator");
  FreeErba algebra(Alphabet("xyz"), weight);
  QuadraticIdentity single{"monomial", {{Rational(1), m}}};
  return eval_identity(algebra, single, algebra.letter('x'), algebra.letter('y'), algebra.letter('z'),
                       derived_ops(algebra));
}

/// Rows: the bracketed words that occur, in canonical order. Columns: the
/// monomial basis, with right-associated columns negated so that the kernel
/// is exactly {r : Σ left − Σ right = 0}.
struct CoefficientMatrix {
  std::vector<BracketedWord> rows;
  std::vector<Arity3Monomial> columns;
  Matrix entries;
};

inline CoefficientMatrix coefficient_matrix(CompanionMode mode, const Weight& weight) {
  CoefficientMatrix out;
  out.columns = monomial_basis(mode);
  std::vector<TermSum> images;
  std::map<BracketedWord, std::size_t, WordLess> row_of;
  for (const auto& m : out.columns) {
    images.push_back(evaluate_monomial(m, mode, weight));
    for (const auto& [w, c] : images.back().terms()) row_of.emplace(w, 0);
  }
  for (auto& [w, index] : row_of) {
    index = out.rows.size();
    out.rows.push_back(w);
  }
  out.entries.assign(out.rows.size(), std::vector<Rational>(out.columns.size()));
  for (std::size_t col = 0; col < out.columns.size(); ++col) {
    Rational sign = out.columns[col].side == Assoc::left ? 1 : -1;
    for (const auto& [w, c] : images[col].terms()) out.entries[row_of.at(w)][col] = sign * c;
  }
  return out;
}

/// In-place reduced row-echelon form. Pivots: leftmost column first, then
/// the first row with a nonzero entry in it. Returns the pivot columns.
inline std::vector<std::size_t> reduce_rows(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& e : m[r]) e *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Canonical basis of the span of `vectors`: nonzero rows of the reduced
/// row-echelon form.
inline std::vector<RelationVector> echelon_basis(std::vector<RelationVector> vectors) {
  reduce_rows(vectors);
  return vectors;
}

/// Reduced row-echelon basis of the exact kernel of `matrix` (which has
/// `columns` columns; needed when the matrix has no rows).
inline std::vector<RelationVector> nullspace(Matrix matrix, std::size_t columns) {
  for (const auto& row : matrix)
    if (row.size() != columns) throw std::invalid_argument("ragged matrix");
  auto pivots = reduce_rows(matrix);
  std::vector<bool> is_pivot(columns);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RelationVector> kernel;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RelationVector v(columns);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -matrix[i][free];
    kernel.push_back(std::move(v));
  }
  return echelon_basis(std::move(kernel));
}

inline std::vector<RelationVector> nullspace(const Matrix& matrix) {
  if (matrix.empty()) throw std::invalid_argument("column count of an empty matrix is unknown");
  return nullspace(matrix, matrix.front().size());
}

/// Linearly independent relation vectors in reduced row-echelon form.
struct RelationBasis {
  CompanionMode mode = CompanionMode::tri;
  Weight weight;
  std::vector<RelationVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

class ModeMismatch : public std::invalid_argument {
public:
  ModeMismatch() : std::invalid_argument("relation bases use different monomial bases") {}
};

inline bool span_equal(const RelationBasis& a, const RelationBasis& b) {
  if (a.mode != b.mode) throw ModeMismatch();
  return echelon_basis(a.vectors) == echelon_basis(b.vectors);
}

// ---- relations given as pairs of tensors -------------------------------

/// Σ c · (a ⊗ b) over generators.
using Tensor = std::vector<std::tuple<Rational, OpSymbol, OpSymbol>>;

inline Tensor tensor(const LinearOp& a, const LinearOp& b) {
  Tensor t;
  for (const auto& [ca, sa] : a.terms)
    for (const auto& [cb, sb] : b.terms) t.emplace_back(ca * cb, sa, sb);
  return t;
}
inline Tensor operator+(Tensor a, const Tensor& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
inline Tensor operator*(const Rational& c, Tensor a) {
  for (auto& t : a) std::get<0>(t) *= c;
  return a;
}

/// The relation (left, right): Σ (x a y) b z = Σ x c (y d z).
inline RelationVector relation(CompanionMode mode, const Tensor& left, const Tensor& right) {
  RelationVector v(monomial_basis(mode).size());
  for (const auto& [c, a, b] : left) v[monomial_index(mode, {Assoc::left, a, b, xyz})] += c;
  for (const auto& [c, a, b] : right) v[monomial_index(mode, {Assoc::right, a, b, xyz})] += c;
  return v;
}

/// The seven generating relations of the extended tridendriform operad.
inline std::vector<RelationVector> etd_relations(const Weight& w) {
  using namespace ops;
  const auto mode = CompanionMode::tri;
  const LinearOp star = prec + succ + w.lambda * LinearOp(dot);
  return {
      relation(mode, tensor(prec, prec), tensor(prec, star) + w.kappa * tensor(dot, dot)),
      relation(mode, tensor(succ, prec), tensor(succ, prec)),
      relation(mode, tensor(star, succ) + w.kappa * tensor(dot, dot), tensor(succ, succ)),
      relation(mode, tensor(succ, dot), tensor(succ, dot)),
      relation(mode, tensor(prec, dot), tensor(dot, succ)),
      relation(mode, tensor(dot, prec), tensor(dot, prec)),
      relation(mode, tensor(dot, dot), tensor(dot, dot)),
  };
}

/// Type of the two-operation relation space: I (λ = κ = 0), II (λ = 0,
/// κ ≠ 0), III (λ ≠ 0).
enum class DendriformType { I, II, III };

inline std::string to_string(DendriformType t) {
  switch (t) {
  case DendriformType::I: return "I";
  case DendriformType::II: return "II";
  case DendriformType::III: return "III";
  }
  return "?";
}

inline DendriformType classify(const Weight& w) {
  if (w.lambda != 0) return DendriformType::III;
  return w.kappa == 0 ? DendriformType::I : DendriformType::II;
}

/// Generators of the di-mode relation space for each type.
inline std::vector<RelationVector> expected_di_relations(const Weight& w) {
  using namespace ops;
  const auto mode = CompanionMode::di;
  const LinearOp star = prec + succ;
  switch (classify(w)) {
  case DendriformType::I:
    return {relation(mode, tensor(prec, prec), tensor(prec, star)),
            relation(mode, tensor(succ, prec), tensor(succ, prec)),
            relation(mode, tensor(star, succ), tensor(succ, succ))};
  case DendriformType::II:
    return {relation(mode, tensor(prec, prec) + tensor(star, succ), tensor(prec, star) + tensor(succ, succ)),
            relation(mode, tensor(succ, prec), tensor(succ, prec))};
  case DendriformType::III:
    return {relation(mode, tensor(succ, prec), tensor(succ, prec))};
  }
  return {};
}

inline RelationBasis companion_basis(CompanionMode mode, const Weight& weight) {
  CoefficientMatrix m = coefficient_matrix(mode, weight);
  return {mode, weight, nullspace(m.entries, m.columns.size())};
}

struct TriCompanion {
  RelationBasis basis;
  RelationBasis expected;
  bool matches_expected = false;
};

/// Kernel of the tri-mode matrix, compared against the seven generating
/// relations instantiated at the weight.
inline TriCompanion tri_companion(const Weight& weight) {
  TriCompanion out{companion_basis(CompanionMode::tri, weight),
                   {CompanionMode::tri, weight, echelon_basis(etd_relations(weight))},
                   false};
  out.matches_expected = span_equal(out.basis, out.expected);
  return out;
}

struct DiCompanion {
  RelationBasis basis;
  DendriformType type = DendriformType::I;
  RelationBasis expected;
  bool matches_expected = false;
};

inline DiCompanion di_companion(const Weight& weight) {
  DiCompanion out{companion_basis(CompanionMode::di, weight), classify(weight),
                  {CompanionMode::di, weight, echelon_basis(expected_di_relations(weight))}, false};
  out.matches_expected = span_equal(out.basis, out.expected);
  return out;
}

// ---- conversions and printing -------------------------------------------

/// Relation (left, right) as the identity Σ left − Σ right = 0.
inline QuadraticIdentity to_identity(const RelationVector& r, CompanionMode mode, std::string name = "relation") {
  auto basis = monomial_basis(mode);
  if (r.size() != basis.size()) throw std::invalid_argument("relation vector has the wrong length");
  QuadraticIdentity id{std::move(name), {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (r[i] != 0) id.terms.emplace_back(basis[i].side == Assoc::left ? r[i] : Rational(-r[i]), basis[i]);
  return id;
}

/// Inverse of `to_identity`. Throws if the identity uses permuted arguments
/// or symbols outside the mode.
inline RelationVector to_relation_vector(const QuadraticIdentity& id, CompanionMode mode) {
  RelationVector v(monomial_basis(mode).size());
  for (const auto& [c, m] : id.terms) {
    if (m.args != xyz) throw std::invalid_argument("identity '" + id.name + "' permutes its arguments");
    v[monomial_index(mode, m)] += m.side == Assoc::left ? c : Rational(-c);
  }
  return v;
}

namespace detail {
inline void append_term(std::string& out, const Rational& c, const std::string& body) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (out.empty())
    out += c < 0 ? "-" : "";
  else
    out += c < 0 ? " - " : " + ";
  if (a != 1) out += to_string(a) + " ";
  out += body;
}
} // namespace detail

/// "Σ cᵢ (x a y) b z = Σ cⱼ x c (y d z)" in monomial-basis order.
inline std::string relation_pretty(const RelationVector& r, CompanionMode mode) {
  auto basis = monomial_basis(mode);
  if (r.size() != basis.size()) throw std::invalid_argument("relation vector has the wrong length");
  std::string left, right;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (r[i] == 0) continue;
    const auto& m = basis[i];
    std::string a = glyph(m.first_op), b = glyph(m.second_op);
    if (m.side == Assoc::left)
      detail::append_term(left, r[i], "(x " + a + " y) " + b + " z");
    else
      detail::append_term(right, r[i], "x " + a + " (y " + b + " z)");
  }
  return (left.empty() ? "0" : left) + " = " + (right.empty() ? "0" : right);
}

/// Plain-text report: mode, weight, dimension, type (di), relations, and
/// the verdict against the known generating set.
inline std::string companion_report(CompanionMode mode, const Weight& weight) {
  std::ostringstream out;
  out << "mode: " << to_string(mode) << "\n";
  out << "weight: " << to_string(weight) << "\n";
  const RelationBasis* basis = nullptr;
  bool matches = false;
  TriCompanion tri;
  DiCompanion di;
  if (mode == CompanionMode::tri) {
    tri = tri_companion(weight);
    basis = &tri.basis;
    matches = tri.matches_expected;
  } else {
    di = di_companion(weight);
    basis = &di.basis;
    matches = di.matches_expected;
  }
  out << "dimension: " << basis->dimension() << "\n";
  if (mode == CompanionMode::di) out << "type: " << to_string(di.type) << "\n";
  out << "relations:\n";
  for (const auto& r : basis->vectors) out << "  " << relation_pretty(r, mode) << "\n";
  out << (mode == CompanionMode::tri ? "span equals the extended tridendriform relations: "
                                     : "span equals the type " + to_string(di.type) + " relations: ")
      << (matches ? "yes" : "no") << "\n";
  return out.str();
}

} // namespace erba

#endif
