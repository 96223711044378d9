#ifndef ERBA_FINDIM_HPP
#define ERBA_FINDIM_HPP

// Finite-dimensional associative and Lie algebras given by structure
// constants, equipped with an operator matrix and a weight.

#include "erba/carrier.hpp"
#include "erba/identities.hpp"
#include "erba/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace erba {

using Vector = std::vector<Rational>;

enum class AlgebraKind { associative, lie };

inline std::string to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "associative"; }

class KindMismatch : public std::invalid_argument {
public:
  explicit KindMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
  DimensionMismatch() : std::invalid_argument("vector dimension does not match the basis") {}
};

/// Basis names plus the product (or bracket) of every ordered pair of basis
/// elements, stored as coefficient vectors over the basis.
class StructureConstants {
public:
  StructureConstants(std::vector<std::string> basis_names, AlgebraKind kind)
      : names_(std::move(basis_names)), kind_(kind),
        table_(names_.size(), std::vector<Vector>(names_.size(), Vector(names_.size()))) {}

  std::size_t dimension() const { return names_.size(); }
  AlgebraKind kind() const { return kind_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown basis element '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }

  void set(std::size_t i, std::size_t j, Vector value) {
    if (value.size() != dimension()) throw DimensionMismatch();
    table_.at(i).at(j) = std::move(value);
  }
  const Vector& get(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  /// For lie kind: fills c(j,i) = −c(i,j) for every pair i < j.
  void complete_antisymmetric() {
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = i + 1; j < dimension(); ++j) {
        Vector neg = table_[i][j];
        for (auto& r : neg) r = -r;
        table_[j][i] = std::move(neg);
      }
  }

  /// Bilinear extension of the structure constants.
  Vector multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dimension() || y.size() != dimension()) throw DimensionMismatch();
    Vector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dimension(); ++j) {
        if (y[j] == 0) continue;
        Rational c = x[i] * y[j];
        const Vector& e = table_[i][j];
        for (std::size_t k = 0; k < dimension(); ++k)
          if (e[k] != 0) out[k] += c * e[k];
      }
    }
    return out;
  }

  Vector basis_vector(std::size_t i) const {
    Vector v(dimension());
    v.at(i) = 1;
    return v;
  }

private:
  std::vector<std::string> names_;
  AlgebraKind kind_;
  std::vector<std::vector<Vector>> table_;
};

/// Square matrix acting on coefficient vectors. Columns hold images:
/// P(b_j) = Σ_i entries[i][j] · b_i.
class OperatorMatrix {
public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != rows_.size()) throw std::invalid_argument("operator matrix must be square");
  }
  static OperatorMatrix zero(std::size_t n) { return OperatorMatrix(std::vector<Vector>(n, Vector(n))); }

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }

  Vector apply(const Vector& v) const {
    if (v.size() != dimension()) throw DimensionMismatch();
    Vector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j)
        if (rows_[i][j] != 0 && v[j] != 0) out[i] += rows_[i][j] * v[j];
    return out;
  }

private:
  std::vector<Vector> rows_;
};

/// Structure constants + operator + weight. In lie kind, `multiply` is the
/// bracket.
class FinDimCarrier {
public:
  using value_type = Vector;

  FinDimCarrier(StructureConstants structure, OperatorMatrix op, Weight weight)
      : structure_(std::move(structure)), op_(std::move(op)), weight_(std::move(weight)) {
    if (op_.dimension() != structure_.dimension())
      throw std::invalid_argument("operator dimension does not match the basis");
  }

  const StructureConstants& structure() const { return structure_; }
  const OperatorMatrix& op() const { return op_; }
  const Weight& weight() const { return weight_; }
  AlgebraKind kind() const { return structure_.kind(); }
  std::size_t dimension() const { return structure_.dimension(); }

  Vector zero() const { return Vector(dimension()); }
  Vector basis(std::size_t i) const { return structure_.basis_vector(i); }
  Vector basis(const std::string& name) const { return basis(structure_.index_of(name)); }

  Vector add(const Vector& a, const Vector& b) const {
    if (a.size() != dimension() || b.size() != dimension()) throw DimensionMismatch();
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }
  Vector negate(const Vector& a) const { return scale(Rational(-1), a); }
  Vector scale(const Rational& c, const Vector& a) const {
    Vector out = a;
    for (auto& r : out) r *= c;
    return out;
  }
  bool is_zero(const Vector& a) const {
    return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
  }
  Vector multiply(const Vector& a, const Vector& b) const { return structure_.multiply(a, b); }
  Vector apply_operator(const Vector& a) const { return op_.apply(a); }

private:
  StructureConstants structure_;
  OperatorMatrix op_;
  Weight weight_;
};

/// Lie bracket; lie kind only.
inline Vector bracket(const FinDimCarrier& c, const Vector& x, const Vector& y) {
  if (c.kind() != AlgebraKind::lie) throw KindMismatch("bracket requires a lie carrier");
  return c.multiply(x, y);
}

/// Associative product; associative kind only.
inline Vector product(const FinDimCarrier& c, const Vector& x, const Vector& y) {
  if (c.kind() != AlgebraKind::associative) throw KindMismatch("product requires an associative carrier");
  return c.multiply(x, y);
}

/// Antisymmetry and Jacobi on basis triples (lie), associativity (associative).
inline bool check_structure(const StructureConstants& sc) {
  const std::size_t n = sc.dimension();
  auto is_zero = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; }); };
  auto sum = [](Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  if (sc.kind() == AlgebraKind::lie) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(sc.get(i, i))) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(sum(sc.get(i, j), sc.get(j, i)))) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector a = sc.basis_vector(i), b = sc.basis_vector(j), c = sc.basis_vector(k);
        if (sc.kind() == AlgebraKind::lie) {
          Vector jac = sum(sum(sc.multiply(sc.multiply(a, b), c), sc.multiply(sc.multiply(b, c), a)),
                           sc.multiply(sc.multiply(c, a), b));
          if (!is_zero(jac)) return false;
        } else {
          Vector left = sc.multiply(sc.multiply(a, b), c);
          Vector right = sc.multiply(a, sc.multiply(b, c));
          for (std::size_t t = 0; t < n; ++t)
            if (left[t] != right[t]) return false;
        }
      }
  return true;
}

/// [P(x),P(y)] − P([P(x),y] + [x,P(y)] + λ[x,y]) − κ[x,y].
inline Vector lie_erb_defect(const FinDimCarrier& c, const Vector& x, const Vector& y) {
  const Weight& w = c.weight();
  Vector px = c.apply_operator(x), py = c.apply_operator(y), xy = c.multiply(x, y);
  Vector inner = c.add(c.add(c.multiply(px, y), c.multiply(x, py)), c.scale(w.lambda, xy));
  return subtract(c, subtract(c, c.multiply(px, py), c.apply_operator(inner)), c.scale(w.kappa, xy));
}

/// The weight-(λ,κ) operator identity on every ordered basis pair: the
/// associative form for associative carriers, the Lie form for lie ones.
inline bool check_erbo(const FinDimCarrier& c) {
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      Vector d = c.kind() == AlgebraKind::lie ? lie_erb_defect(c, c.basis(i), c.basis(j))
                                              : erb_defect(c, c.basis(i), c.basis(j));
      if (!c.is_zero(d)) return false;
    }
  return true;
}

/// x ∘ y = [P(x), y].
inline Vector circle(const FinDimCarrier& c, const Vector& x, const Vector& y) {
  return bracket(c, c.apply_operator(x), y);
}

enum class TableOp { circle, bracket, product };

/// n×n table over basis elements in basis order: entry [i][j] = b_i op b_j.
inline std::vector<std::vector<Vector>> cayley_table(const FinDimCarrier& c, TableOp op) {
  std::vector<std::vector<Vector>> table(c.dimension());
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      Vector x = c.basis(i), y = c.basis(j);
      switch (op) {
      case TableOp::circle: table[i].push_back(circle(c, x, y)); break;
      case TableOp::bracket: table[i].push_back(bracket(c, x, y)); break;
      case TableOp::product: table[i].push_back(product(c, x, y)); break;
      }
    }
  return table;
}

inline Bindings<Vector> post_lie_bindings(const FinDimCarrier& c) {
  return {
      {ops::lbrk.name, [c](const Vector& x, const Vector& y) { return bracket(c, x, y); }},
      {ops::circ.name, [c](const Vector& x, const Vector& y) { return circle(c, x, y); }},
  };
}

/// The two extended post-Lie compatibilities for (∘, [,]) on all basis
/// triples, at the carrier's weight.
inline bool check_extended_postlie(const FinDimCarrier& c) {
  if (c.kind() != AlgebraKind::lie) throw KindMismatch("post-Lie check requires a lie carrier");
  auto b = post_lie_bindings(c);
  for (const auto& id : post_lie_axioms(c.weight()))
    for (std::size_t i = 0; i < c.dimension(); ++i)
      for (std::size_t j = 0; j < c.dimension(); ++j)
        for (std::size_t k = 0; k < c.dimension(); ++k)
          if (!identity_holds(c, id, c.basis(i), c.basis(j), c.basis(k), b)) return false;
  return true;
}

/// The commutator Lie algebra [x,y] = xy − yx of an associative carrier,
/// with the same operator and weight.
inline FinDimCarrier commutator_carrier(const FinDimCarrier& c) {
  if (c.kind() != AlgebraKind::associative) throw KindMismatch("commutator requires an associative carrier");
  StructureConstants sc(c.structure().basis_names(), AlgebraKind::lie);
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      Vector v = c.structure().get(i, j);
      const Vector& w = c.structure().get(j, i);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= w[k];
      sc.set(i, j, std::move(v));
    }
  return FinDimCarrier(std::move(sc), c.op(), c.weight());
}

/// sl(2) in the basis (e, f, h) with [h,e] = 2e, [h,f] = −2f, [e,f] = h, the
/// operator
///   P = [[−2, 0, −3/2], [0, 1, −2], [1, 3/4, −1/2]]
/// and weight (1, 1).
inline FinDimCarrier sl2_example() {
  StructureConstants sc({"e", "f", "h"}, AlgebraKind::lie);
  sc.set(2, 0, {2, 0, 0});
  sc.set(2, 1, {0, -2, 0});
  sc.set(0, 1, {0, 0, 1});
  sc.set(0, 2, {-2, 0, 0});
  sc.set(1, 2, {0, 2, 0});
  sc.set(1, 0, {0, 0, -1});
  OperatorMatrix p({{-2, 0, Rational(-3, 2)}, {0, 1, -2}, {1, Rational(3, 4), Rational(-1, 2)}});
  return FinDimCarrier(std::move(sc), std::move(p), Weight{1, 1});
}

/// "2e - (3/2)h"; "0" for the zero vector.
inline std::string format_vector(const FinDimCarrier& c, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational a = v[i];
    bool negative = a < 0;
    if (negative) a = -a;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (a != 1) out += denominator(a) == 1 ? to_string(a) : "(" + to_string(a) + ")";
    out += c.structure().basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

// ---- JSON carrier files -------------------------------------------------

namespace detail {
inline Rational json_rational(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string or an integer, got " + j.dump());
}
} // namespace detail

/// Reads a coefficient object {"name": "rational", ...} into a vector.
inline Vector vector_from_json(const StructureConstants& sc, const nlohmann::json& j) {
  Vector v(sc.dimension());
  if (!j.is_object()) throw std::invalid_argument("expected an object of basis coefficients");
  for (const auto& [name, value] : j.items()) v[sc.index_of(name)] += detail::json_rational(value);
  return v;
}

/// Carrier from {"kind", "basis", "products", "operator", "lambda", "kappa"}.
/// Product keys are "a,b" over basis names; omitted entries are zero; lie
/// carriers may list only one ordering of each pair.
inline FinDimCarrier carrier_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  AlgebraKind k;
  if (kind == "lie")
    k = AlgebraKind::lie;
  else if (kind == "associative")
    k = AlgebraKind::associative;
  else
    throw std::invalid_argument("kind must be \"lie\" or \"associative\"");
  StructureConstants sc(j.at("basis").get<std::vector<std::string>>(), k);
  if (sc.dimension() == 0) throw std::invalid_argument("basis must be nonempty");
  std::vector<std::vector<bool>> given(sc.dimension(), std::vector<bool>(sc.dimension()));
  if (j.contains("products")) {
    for (const auto& [key, value] : j.at("products").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("product key '" + key + "' must be \"a,b\"");
      std::size_t a = sc.index_of(key.substr(0, comma));
      std::size_t b = sc.index_of(key.substr(comma + 1));
      sc.set(a, b, vector_from_json(sc, value));
      given[a][b] = true;
    }
  }
  if (k == AlgebraKind::lie) {
    for (std::size_t a = 0; a < sc.dimension(); ++a)
      for (std::size_t b = 0; b < sc.dimension(); ++b)
        if (given[a][b] && !given[b][a]) {
          Vector neg = sc.get(a, b);
          for (auto& r : neg) r = -r;
          sc.set(b, a, std::move(neg));
          given[b][a] = true;
        }
  }
  OperatorMatrix op = OperatorMatrix::zero(sc.dimension());
  if (j.contains("operator")) {
    std::vector<Vector> rows;
    for (const auto& row : j.at("operator")) {
      Vector r;
      for (const auto& e : row) r.push_back(detail::json_rational(e));
      rows.push_back(std::move(r));
    }
    op = OperatorMatrix(std::move(rows));
  }
  Weight w{j.contains("lambda") ? detail::json_rational(j.at("lambda")) : Rational(0),
           j.contains("kappa") ? detail::json_rational(j.at("kappa")) : Rational(0)};
  return FinDimCarrier(std::move(sc), std::move(op), std::move(w));
}

inline nlohmann::json carrier_to_json(const FinDimCarrier& c) {
  nlohmann::json j;
  const auto& sc = c.structure();
  j["kind"] = to_string(c.kind());
  j["basis"] = sc.basis_names();
  j["products"] = nlohmann::json::object();
  for (std::size_t a = 0; a < sc.dimension(); ++a)
    for (std::size_t b = 0; b < sc.dimension(); ++b) {
      nlohmann::json entry = nlohmann::json::object();
      const Vector& v = sc.get(a, b);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) entry[sc.basis_names()[k]] = to_string(v[k]);
      if (!entry.empty()) j["products"][sc.basis_names()[a] + "," + sc.basis_names()[b]] = entry;
    }
  j["operator"] = nlohmann::json::array();
  for (const auto& row : c.op().rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    j["operator"].push_back(r);
  }
  j["lambda"] = to_string(c.weight().lambda);
  j["kappa"] = to_string(c.weight().kappa);
  return j;
}

} // namespace erba

#endif
