#include "erba/carrier.hpp"
#include "erba/findim.hpp"

#include <gtest/gtest.h>

using namespace erba;

namespace {

// Q with r·r = r and P = 1: P(x)P(y) = xy and the right side is
// (2 + λ + κ)xy, so any weight with λ + κ = −1 works.
FinDimCarrier scalar_line(const Weight& w) {
  StructureConstants sc({"r"}, AlgebraKind::associative);
  sc.set(0, 0, {1});
  return FinDimCarrier(std::move(sc), OperatorMatrix(std::vector<Vector>{Vector{1}}), w);
}

// Upper triangular 2x2 matrices, basis a = e11, b = e12, d = e22. With
// span(a, b) and span(d) as complementary subalgebras, P acting by the two
// roots of c² + λc + κ on them is an operator of weight (λ, κ). For (−1, −2)
// the roots are 2 and −1.
FinDimCarrier triangular() {
  StructureConstants sc({"a", "b", "d"}, AlgebraKind::associative);
  sc.set(0, 0, {1, 0, 0});
  sc.set(0, 1, {0, 1, 0});
  sc.set(1, 2, {0, 1, 0});
  sc.set(2, 2, {0, 0, 1});
  OperatorMatrix p({{2, 0, 0}, {0, 2, 0}, {0, 0, -1}});
  return FinDimCarrier(std::move(sc), std::move(p), Weight{-1, -2});
}

// Plain 2x2 matrix arithmetic, independent of the structure constants.
using M2 = std::array<Rational, 4>;
M2 to_matrix(const Vector& v) { return {v[0], v[1], 0, v[2]}; }
M2 matmul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Vector random_vector(Sampler& rng, std::size_t n) {
  Vector v(n);
  for (auto& r : v) r = rng.coefficient();
  return v;
}

} // namespace

static_assert(ErbaCarrier<FreeErba>);
static_assert(ErbaCarrier<FinDimCarrier>);

TEST(Carrier, ScalarLineIsAnOperator) {
  FinDimCarrier c = scalar_line({0, -1});
  EXPECT_TRUE(holds_erb_identity(c, c.basis(0), c.basis(0)));
  FinDimCarrier bad = scalar_line({1, 1});
  EXPECT_FALSE(holds_erb_identity(bad, bad.basis(0), bad.basis(0)));
}

TEST(Carrier, TriangularIsAnOperator) {
  FinDimCarrier c = triangular();
  ASSERT_TRUE(check_structure(c.structure()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(holds_erb_identity(c, c.basis(i), c.basis(j))) << i << "," << j;
  // The product really is matrix multiplication.
  Sampler rng(2);
  for (int i = 0; i < 20; ++i) {
    Vector x = random_vector(rng, 3), y = random_vector(rng, 3);
    EXPECT_EQ(to_matrix(c.multiply(x, y)), matmul(to_matrix(x), to_matrix(y)));
  }
}

TEST(Lift, ScalarLineExamples) {
  FreeErba source(Alphabet("xy"), {0, -1});
  FinDimCarrier c = scalar_line({0, -1});
  auto f = lift(source, {{'x', c.basis(0)}, {'y', c.basis(0)}}, c);
  EXPECT_EQ(f(source.parse("x[y]")), Vector{1});
  // ⌊x⌋⋄⌊y⌋ = ⌊x⌊y⌋⌋ + ⌊⌊x⌋y⌋ − xy maps to r + r − r.
  TermSum product = source.multiply(source.parse("[x]"), source.parse("[y]"));
  EXPECT_EQ(to_string(product), "[x[y]] + [[x]y] - xy");
  EXPECT_EQ(f(product), Vector{1});
  EXPECT_EQ(f(source.parse("[x]")), Vector{1});
  EXPECT_EQ(f(source.parse("2*x - 3*[y]")), Vector{-1});
}

TEST(Lift, IsAHomomorphismIntoTriangular) {
  FinDimCarrier c = triangular();
  FreeErba source(Alphabet("xyz"), c.weight());
  Sampler rng(31);
  std::map<char, Vector> assignment{
      {'x', random_vector(rng, 3)}, {'y', random_vector(rng, 3)}, {'z', random_vector(rng, 3)}};
  auto f = lift(source, assignment, c);
  for (int i = 0; i < 100; ++i) {
    TermSum u = random_termsum(rng, source.alphabet_ptr(), 3, 3);
    TermSum v = random_termsum(rng, source.alphabet_ptr(), 3, 3);
    ASSERT_EQ(f(source.multiply(u, v)), c.multiply(f(u), f(v))) << to_string(u) << " * " << to_string(v);
    ASSERT_EQ(f(apply_p(u)), c.apply_operator(f(u)));
    ASSERT_EQ(f(source.add(u, v)), c.add(f(u), f(v)));
  }
}

TEST(Lift, IntoFreeAlgebra) {
  FreeErba source(Alphabet("xyz"), {1, -2});
  auto id = lift(source, {{'x', source.letter('x')}, {'y', source.letter('y')}, {'z', source.letter('z')}}, source);
  Sampler rng(4);
  for (int i = 0; i < 100; ++i) {
    TermSum u = random_termsum(rng, source.alphabet_ptr(), 3, 3);
    ASSERT_EQ(id(u), u) << to_string(u);
  }
  // A nontrivial substitution is still a homomorphism.
  auto g = lift(source, {{'x', source.parse("y + [z]")}, {'y', source.parse("2*x")}, {'z', source.parse("[x]y")}}, source);
  for (int i = 0; i < 40; ++i) {
    TermSum u = random_termsum(rng, source.alphabet_ptr(), 2, 2);
    TermSum v = random_termsum(rng, source.alphabet_ptr(), 2, 2);
    ASSERT_EQ(g(source.multiply(u, v)), source.multiply(g(u), g(v)));
    ASSERT_EQ(g(apply_p(u)), apply_p(g(u)));
  }
}

TEST(Lift, Errors) {
  FreeErba source(Alphabet("xy"), {0, -1});
  FinDimCarrier c = scalar_line({0, -1});
  EXPECT_THROW(lift(source, {{'x', c.basis(0)}}, scalar_line({1, -2})), WeightMismatch);
  auto f = lift(source, {{'x', c.basis(0)}}, c);
  EXPECT_THROW(f(source.parse("x[y]")), MissingAssignment);
  EXPECT_EQ(f(source.parse("x[x]")), Vector{1});
}

TEST(Carrier, ErbDefectOnFreeAlgebraIsZero) {
  FreeErba a(Alphabet("xyz"), {-3, 2});
  Sampler rng(8);
  for (int i = 0; i < 50; ++i) {
    TermSum u = random_termsum(rng, a.alphabet_ptr(), 2, 3), v = random_termsum(rng, a.alphabet_ptr(), 2, 3);
    ASSERT_TRUE(a.is_zero(erb_defect(a, u, v)));
  }
}
