#ifndef ERBA_CARRIER_HPP
#define ERBA_CARRIER_HPP

#include "erba/free_erba.hpp"
#include "erba/rational.hpp"

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>

namespace erba {

/// Vector-space operations every carrier provides.
template <class C>
concept LinearCarrier = requires(const C& c, const typename C::value_type& a, const Rational& q) {
  typename C::value_type;
  { c.zero() } -> std::convertible_to<typename C::value_type>;
  { c.add(a, a) } -> std::convertible_to<typename C::value_type>;
  { c.negate(a) } -> std::convertible_to<typename C::value_type>;
  { c.scale(q, a) } -> std::convertible_to<typename C::value_type>;
  { c.is_zero(a) } -> std::convertible_to<bool>;
};

/// An algebra with a linear operator and a weight. `multiply` is bilinear,
/// `apply_operator` linear; the extended Rota-Baxter identity is checked on
/// demand, never assumed.
template <class C>
concept ErbaCarrier = LinearCarrier<C> && requires(const C& c, const typename C::value_type& a) {
  { c.multiply(a, a) } -> std::convertible_to<typename C::value_type>;
  { c.apply_operator(a) } -> std::convertible_to<typename C::value_type>;
  { c.weight() } -> std::convertible_to<Weight>;
};

template <LinearCarrier C>
typename C::value_type subtract(const C& c, const typename C::value_type& a, const typename C::value_type& b) {
  if constexpr (requires { c.subtract(a, b); })
    return c.subtract(a, b);
  else
    return c.add(a, c.negate(b));
}

template <LinearCarrier C>
bool equal(const C& c, const typename C::value_type& a, const typename C::value_type& b) {
  return c.is_zero(subtract(c, a, b));
}

/// P(x)P(y) − P(xP(y)) − P(P(x)y) − λP(xy) − κxy.
template <ErbaCarrier C>
typename C::value_type erb_defect(const C& c, const typename C::value_type& x, const typename C::value_type& y) {
  const Weight& w = c.weight();
  auto px = c.apply_operator(x);
  auto py = c.apply_operator(y);
  auto xy = c.multiply(x, y);
  auto r = c.multiply(px, py);
  r = subtract(c, r, c.apply_operator(c.multiply(x, py)));
  r = subtract(c, r, c.apply_operator(c.multiply(px, y)));
  r = subtract(c, r, c.scale(w.lambda, c.apply_operator(xy)));
  r = subtract(c, r, c.scale(w.kappa, xy));
  return r;
}

template <ErbaCarrier C>
bool holds_erb_identity(const C& c, const typename C::value_type& x, const typename C::value_type& y) {
  return c.is_zero(erb_defect(c, x, y));
}

class MissingAssignment : public std::out_of_range {
public:
  explicit MissingAssignment(char letter)
      : std::out_of_range(std::string("no assignment for letter '") + letter + "'") {}
};

/// The extension of a letter assignment to the unique homomorphism of
/// extended Rota-Baxter algebras out of a free one: concatenation goes to
/// the target product, ⌊w⌋ goes to P applied to the image of w.
template <ErbaCarrier Target>
class Lift {
public:
  using value_type = typename Target::value_type;

  Lift(const FreeErba& source, Target target, std::map<char, value_type> assignment)
      : target_(std::move(target)), assignment_(std::move(assignment)) {
    if (!(source.weight() == Weight(target_.weight()))) throw WeightMismatch();
  }

  value_type operator()(const TermSum& s) const {
    value_type out = target_.zero();
    for (const auto& [w, c] : s.terms()) out = target_.add(out, target_.scale(c, (*this)(w)));
    return out;
  }

  value_type operator()(const BracketedWord& w) const {
    auto factors = w.factors();
    value_type out = image(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) out = target_.multiply(out, image(factors[i]));
    return out;
  }

  const Target& target() const { return target_; }

private:
  value_type image(const Factor& f) const {
    if (f.is_bracket()) return target_.apply_operator((*this)(f.inner()));
    auto it = assignment_.find(f.symbol());
    if (it == assignment_.end()) throw MissingAssignment(f.symbol());
    return it->second;
  }

  Target target_;
  std::map<char, value_type> assignment_;
};

template <ErbaCarrier Target>
Lift<Target> lift(const FreeErba& source, std::map<char, typename Target::value_type> assignment, Target target) {
  return Lift<Target>(source, std::move(target), std::move(assignment));
}

} // namespace erba

#endif
