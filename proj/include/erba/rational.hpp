#ifndef ERBA_RATIONAL_HPP
#define ERBA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace erba {

/// Exact rational scalar: arbitrary-precision, always stored in lowest terms
/// with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Accepts an optional sign, an integer, and an optional "/denominator".
inline Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError(std::string("expected ") + what, i);
    return Integer(std::string(text.substr(start, i - start)));
  };
  Integer num = digits("digits");
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits("denominator digits");
    if (den == 0) throw ParseError("zero denominator", i);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", i);
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// The pair (lambda, kappa) every product and identity is parameterized by.
struct Weight {
  Rational lambda;
  Rational kappa;

  friend bool operator==(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) {
  return "(" + to_string(w.lambda) + "," + to_string(w.kappa) + ")";
}

} // namespace erba

#endif
