#ifndef ERBA_FREE_ERBA_HPP
#define ERBA_FREE_ERBA_HPP

// The free extended Rota-Baxter algebra of weight (lambda, kappa) on an
// alphabet: exact linear combinations of bracketed words with the recursive
// product and the bracketing operator.

#include "erba/rational.hpp"
#include "erba/rbw.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace erba {

class AlphabetMismatch : public std::invalid_argument {
public:
  AlphabetMismatch() : std::invalid_argument("operands are over different alphabets") {}
};

class WeightMismatch : public std::invalid_argument {
public:
  WeightMismatch() : std::invalid_argument("operands carry different weights") {}
};

/// Finite linear combination of bracketed words with nonzero rational
/// coefficients, keyed in canonical word order.
class TermSum {
public:
  using Terms = std::map<BracketedWord, Rational, WordLess>;

  explicit TermSum(Alphabet alphabet) : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))) {}
  explicit TermSum(std::shared_ptr<const Alphabet> alphabet) : alphabet_(std::move(alphabet)) {}

  static TermSum word(std::shared_ptr<const Alphabet> alphabet, const BracketedWord& w, const Rational& c = 1) {
    TermSum s(std::move(alphabet));
    s.add_term(w, c);
    return s;
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const BracketedWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const BracketedWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool same_alphabet(const TermSum& other) const {
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
  }

  friend bool operator==(const TermSum& a, const TermSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->second != ib->second || !(ia->first == ib->first)) return false;
    }
    return true;
  }

private:
  std::shared_ptr<const Alphabet> alphabet_;
  Terms terms_;
};

inline void require_same_alphabet(const TermSum& u, const TermSum& v) {
  if (!u.same_alphabet(v)) throw AlphabetMismatch();
}

inline TermSum add(const TermSum& u, const TermSum& v) {
  require_same_alphabet(u, v);
  TermSum out = u;
  for (const auto& [w, c] : v.terms()) out.add_term(w, c);
  return out;
}

inline TermSum scale(const Rational& c, const TermSum& u) {
  TermSum out(u.alphabet_ptr());
  if (c == 0) return out;
  for (const auto& [w, d] : u.terms()) out.add_term(w, c * d);
  return out;
}

inline TermSum negate(const TermSum& u) { return scale(Rational(-1), u); }

inline TermSum subtract(const TermSum& u, const TermSum& v) {
  require_same_alphabet(u, v);
  TermSum out = u;
  for (const auto& [w, c] : v.terms()) out.add_term(w, -c);
  return out;
}

/// P_e: linear extension of w -> ⌊w⌋.
inline TermSum apply_p(const TermSum& u) {
  TermSum out(u.alphabet_ptr());
  for (const auto& [w, c] : u.terms()) out.add_term(BracketedWord::bracketed(w), c);
  return out;
}

/// Canonical text. Terms run from highest depth down; within one depth they
/// follow `compare`. Coefficient 1 is omitted, other coefficients print as
/// "c*word".
inline std::string to_string(const TermSum& s) {
  if (s.is_zero()) return "0";
  std::vector<const TermSum::Terms::value_type*> order;
  order.reserve(s.size());
  for (const auto& entry : s.terms()) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->first.depth() > b->first.depth(); });
  std::string out;
  bool first = true;
  for (auto* entry : order) {
    Rational c = entry->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != 1) out += to_string(c) + "*";
    out += to_string(entry->first);
    first = false;
  }
  return out;
}

/// Parses `expr := term (('+'|'-') term)* ; term := [rat '*'] word`.
/// A leading sign on the first term is accepted.
inline TermSum parse_expression(std::string_view text, std::shared_ptr<const Alphabet> alphabet) {
  detail::WordReader reader(text, *alphabet);
  TermSum out(alphabet);
  reader.skip_space();
  if (reader.at_end()) throw ParseError("empty expression", 0);
  bool first = true;
  while (true) {
    reader.skip_space();
    Rational sign = 1;
    if (!first) {
      if (reader.at_end()) break;
      char op = reader.peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", reader.position());
      if (op == '-') sign = -1;
      reader.advance();
      reader.skip_space();
    }
    // optional coefficient
    Rational coeff = 1;
    std::size_t start = reader.position();
    if (!reader.at_end() && (reader.peek() == '-' || (reader.peek() >= '0' && reader.peek() <= '9'))) {
      std::size_t end = start;
      if (text[end] == '-') ++end;
      while (end < text.size() && ((text[end] >= '0' && text[end] <= '9') || text[end] == '/')) ++end;
      std::string_view rat = text.substr(start, end - start);
      if (rat == "-") {
        coeff = -1;
        reader.advance();
      } else {
        try {
          coeff = parse_rational(rat);
        } catch (const ParseError& e) {
          throw ParseError("malformed coefficient '" + std::string(rat) + "'", start + e.position());
        }
        while (reader.position() < end) reader.advance();
        reader.skip_space();
        if (reader.at_end() || reader.peek() != '*') throw ParseError("expected '*' after coefficient", reader.position());
        reader.advance();
      }
    }
    BracketedWord w = reader.word();
    out.add_term(w, sign * coeff);
    first = false;
  }
  return out;
}

inline TermSum parse_expression(std::string_view text, const Alphabet& alphabet) {
  return parse_expression(text, std::make_shared<const Alphabet>(alphabet));
}

/// Multiplication table of a finite-dimensional base algebra whose basis is
/// the alphabet: (a, b) -> linear combination of letters. Missing entries
/// are zero.
class MultiplicationTable {
public:
  using Row = std::map<char, Rational>;

  void set(char a, char b, Row value) {
    std::erase_if(value, [](const auto& kv) { return kv.second == 0; });
    entries_[{a, b}] = std::move(value);
  }
  const Row& product(char a, char b) const {
    static const Row empty;
    auto it = entries_.find({a, b});
    return it == entries_.end() ? empty : it->second;
  }

  /// True iff the table is associative on all basis triples of `alphabet`.
  bool is_associative(const Alphabet& alphabet) const {
    for (char a : alphabet.letters())
      for (char b : alphabet.letters())
        for (char c : alphabet.letters()) {
          Row left, right;
          for (const auto& [d, p] : product(a, b))
            for (const auto& [e, q] : product(d, c)) left[e] += p * q;
          for (const auto& [d, p] : product(b, c))
            for (const auto& [e, q] : product(a, d)) right[e] += p * q;
          std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
          std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
          if (left != right) return false;
        }
    return true;
  }

private:
  std::map<std::pair<char, char>, Row> entries_;
};

/// One free extended Rota-Baxter algebra instance: alphabet, weight, and in
/// table mode the multiplication table of the base algebra.
///
/// Free mode: depth-0 products are concatenation. Table mode: adjacent
/// letters are always reduced through the table, so normalized words
/// strictly alternate letters and brackets.
class FreeErba {
public:
  using value_type = TermSum;

  FreeErba(Alphabet alphabet, Weight weight)
      : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))), weight_(std::move(weight)) {}

  FreeErba(Alphabet alphabet, Weight weight, MultiplicationTable table)
      : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))), weight_(std::move(weight)),
        table_(std::move(table)) {}

  const Weight& weight() const { return weight_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  bool table_mode() const { return table_.has_value(); }

  TermSum zero() const { return TermSum(alphabet_); }
  TermSum letter(char c) const {
    if (!alphabet_->contains(c)) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    return TermSum::word(alphabet_, BracketedWord::letter(c));
  }
  TermSum word(const BracketedWord& w, const Rational& c = 1) const {
    return normalize(TermSum::word(alphabet_, w, c));
  }
  TermSum parse(std::string_view text) const { return normalize(parse_expression(text, alphabet_)); }

  TermSum add(const TermSum& u, const TermSum& v) const { return erba::add(u, v); }
  TermSum subtract(const TermSum& u, const TermSum& v) const { return erba::subtract(u, v); }
  TermSum negate(const TermSum& u) const { return erba::negate(u); }
  TermSum scale(const Rational& c, const TermSum& u) const { return erba::scale(c, u); }
  TermSum apply_operator(const TermSum& u) const { return apply_p(u); }
  bool is_zero(const TermSum& u) const { return u.is_zero(); }
  bool equal(const TermSum& u, const TermSum& v) const { return u == v; }

  /// Bilinear extension of the recursive product on basis words.
  TermSum multiply(const TermSum& u, const TermSum& v) const {
    require_same_alphabet(u, v);
    TermSum out(alphabet_);
    for (const auto& [a, ca] : u.terms())
      for (const auto& [b, cb] : v.terms()) multiply_words(a, b, ca * cb, out);
    return out;
  }

  /// Rewrites every word so no two letters are adjacent (table mode); the
  /// identity in free mode.
  TermSum normalize(const TermSum& u) const {
    if (!table_) return u;
    TermSum out(alphabet_);
    for (const auto& [w, c] : u.terms()) {
      std::vector<std::pair<std::vector<Factor>, Rational>> acc{{{}, c}};
      for (const Factor& f : w.factors()) {
        if (f.is_letter()) {
          append_factor(acc, f);
        } else {
          TermSum inner = normalize(TermSum::word(alphabet_, f.inner()));
          std::vector<std::pair<std::vector<Factor>, Rational>> next;
          for (auto& [prefix, pc] : acc)
            for (const auto& [iw, ic] : inner.terms()) {
              auto factors = prefix;
              factors.push_back(Factor::bracket(iw));
              next.emplace_back(std::move(factors), pc * ic);
            }
          acc = std::move(next);
        }
      }
      for (auto& [factors, fc] : acc)
        if (!factors.empty()) out.add_term(BracketedWord(std::move(factors)), fc);
    }
    return out;
  }

private:
  using Partial = std::vector<std::pair<std::vector<Factor>, Rational>>;

  // Appends one factor to every partial word, reducing letter-letter
  // junctions through the table.
  void append_factor(Partial& acc, const Factor& f) const {
    if (!table_ || f.is_bracket()) {
      for (auto& [factors, c] : acc) factors.push_back(f);
      return;
    }
    Partial next;
    for (auto& [factors, c] : acc) {
      if (factors.empty() || factors.back().is_bracket()) {
        factors.push_back(f);
        next.emplace_back(std::move(factors), c);
        continue;
      }
      char left = factors.back().symbol();
      for (const auto& [letter, p] : table_->product(left, f.symbol())) {
        auto reduced = factors;
        reduced.back() = Factor::letter(letter);
        next.emplace_back(std::move(reduced), c * p);
      }
    }
    acc = std::move(next);
  }

  // out += coeff * (prefix · middle · suffix) for every word of middle.
  void splice(std::span<const Factor> prefix, const TermSum& middle, std::span<const Factor> suffix,
              const Rational& coeff, TermSum& out) const {
    if (!table_) {
      for (const auto& [m, cm] : middle.terms()) {
        std::vector<Factor> factors;
        factors.reserve(prefix.size() + m.breadth() + suffix.size());
        factors.insert(factors.end(), prefix.begin(), prefix.end());
        factors.insert(factors.end(), m.factors().begin(), m.factors().end());
        factors.insert(factors.end(), suffix.begin(), suffix.end());
        out.add_term(BracketedWord(std::move(factors)), coeff * cm);
      }
      return;
    }
    for (const auto& [m, cm] : middle.terms()) {
      Partial acc{{std::vector<Factor>(prefix.begin(), prefix.end()), coeff * cm}};
      for (const Factor& f : m.factors()) append_factor(acc, f);
      for (const Factor& f : suffix) append_factor(acc, f);
      for (auto& [factors, c] : acc) out.add_term(BracketedWord(std::move(factors)), c);
    }
  }

  void multiply_words(const BracketedWord& u, const BracketedWord& v, const Rational& coeff, TermSum& out) const {
    auto fu = u.factors();
    auto fv = v.factors();
    if (u.tail() == 1 && v.head() == 1) {
      // u = u' ⌊ū⌋, v = ⌊v̄⌋ v'; only the middle pair interacts.
      auto middle = bracket_product(fu.back().inner(), fv.front().inner());
      splice(fu.first(fu.size() - 1), *middle, fv.subspan(1), coeff, out);
      return;
    }
    if (!table_) {
      std::vector<Factor> factors;
      factors.reserve(fu.size() + fv.size());
      factors.insert(factors.end(), fu.begin(), fu.end());
      factors.insert(factors.end(), fv.begin(), fv.end());
      out.add_term(BracketedWord(std::move(factors)), coeff);
      return;
    }
    Partial acc{{std::vector<Factor>(fu.begin(), fu.end()), coeff}};
    for (const Factor& f : fv) append_factor(acc, f);
    for (auto& [factors, c] : acc) out.add_term(BracketedWord(std::move(factors)), c);
  }

  // ⌊a⌋ ⋄ ⌊b⌋ = ⌊a ⋄ ⌊b⌋⌋ + ⌊⌊a⌋ ⋄ b⌋ + λ⌊a ⋄ b⌋ + κ(a ⋄ b)
  // The recursion revisits the same inner pairs many times, so results are
  // memoized; the cache is shared by copies of the algebra.
  std::shared_ptr<const TermSum> bracket_product(const BracketedWord& a, const BracketedWord& b) const {
    auto key = std::make_pair(a, b);
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->products.find(key);
      if (it != cache_->products.end()) return it->second;
    }
    auto out = std::make_shared<const TermSum>(expand_bracket_product(a, b));
    std::lock_guard lock(cache_->mutex);
    cache_->products.emplace(std::move(key), out);
    return out;
  }

  TermSum expand_bracket_product(const BracketedWord& a, const BracketedWord& b) const {
    TermSum out(alphabet_);
    TermSum left(alphabet_);
    multiply_words(a, BracketedWord::bracketed(b), 1, left);
    multiply_words(BracketedWord::bracketed(a), b, 1, left);
    if (weight_.lambda != 0 || weight_.kappa != 0) {
      TermSum ab(alphabet_);
      multiply_words(a, b, 1, ab);
      if (weight_.lambda != 0)
        for (const auto& [w, c] : ab.terms()) left.add_term(w, weight_.lambda * c);
      if (weight_.kappa != 0)
        for (const auto& [w, c] : ab.terms()) out.add_term(w, weight_.kappa * c);
    }
    for (const auto& [w, c] : left.terms()) out.add_term(BracketedWord::bracketed(w), c);
    return out;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<BracketedWord, BracketedWord>& p) const {
      return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
  };
  struct Cache {
    std::mutex mutex;
    std::unordered_map<std::pair<BracketedWord, BracketedWord>, std::shared_ptr<const TermSum>, PairHash> products;
  };

  std::shared_ptr<const Alphabet> alphabet_;
  Weight weight_;
  std::optional<MultiplicationTable> table_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// u ⋄ v in the free-mode algebra on the operands' alphabet.
inline TermSum mul(const TermSum& u, const TermSum& v, const Weight& weight) {
  require_same_alphabet(u, v);
  return FreeErba(u.alphabet(), weight).multiply(u, v);
}

/// u ⋄ v − v ⋄ u.
inline TermSum commutator_bracket(const TermSum& u, const TermSum& v, const Weight& weight) {
  return subtract(mul(u, v, weight), mul(v, u, weight));
}

inline bool check_assoc(const TermSum& u, const TermSum& v, const TermSum& w, const Weight& weight) {
  return mul(mul(u, v, weight), w, weight) == mul(u, mul(v, w, weight), weight);
}

/// P(u)P(v) − P(uP(v)) − P(P(u)v) − λP(uv) − κuv == 0 with P = P_e.
inline bool check_erb_identity(const TermSum& u, const TermSum& v, const Weight& weight) {
  FreeErba algebra(u.alphabet(), weight);
  TermSum pu = apply_p(u), pv = apply_p(v), uv = algebra.multiply(u, v);
  TermSum r = algebra.multiply(pu, pv);
  r = subtract(r, apply_p(algebra.multiply(u, pv)));
  r = subtract(r, apply_p(algebra.multiply(pu, v)));
  r = subtract(r, scale(weight.lambda, apply_p(uv)));
  r = subtract(r, scale(weight.kappa, uv));
  return r.is_zero();
}

/// Random TermSum with 1..max_terms words of bounded depth and breadth.
inline TermSum random_termsum(Sampler& rng, const std::shared_ptr<const Alphabet>& alphabet, std::size_t max_depth,
                              std::size_t max_breadth, std::size_t max_terms = 2) {
  TermSum s(alphabet);
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) s.add_term(rng.word(*alphabet, max_depth, max_breadth), rng.coefficient());
  if (s.is_zero()) s.add_term(rng.word(*alphabet, max_depth, max_breadth), 1);
  return s;
}

/// Triples of scaled single words. Every identity we check is multilinear,
/// so basis-word triples lose nothing against random sums and keep the
/// expansions small.
inline std::vector<std::array<TermSum, 3>> sample_triples(Sampler& rng, const std::shared_ptr<const Alphabet>& alphabet,
                                                          std::size_t count, std::size_t max_depth,
                                                          std::size_t max_breadth) {
  std::vector<std::array<TermSum, 3>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    TermSum a = random_termsum(rng, alphabet, max_depth, max_breadth, 1);
    TermSum b = random_termsum(rng, alphabet, max_depth, max_breadth, 1);
    TermSum c = random_termsum(rng, alphabet, max_depth, max_breadth, 1);
    out.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return out;
}

} // namespace erba

#endif
