#ifndef ERBA_RBW_HPP
#define ERBA_RBW_HPP

// Rota-Baxter bracketed words: alternating sequences of letters and
// bracketed subwords in which no two brackets are adjacent at any level.

#include "erba/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace erba {

/// Set of single lowercase ASCII letters. Stored sorted, so alphabet
/// position coincides with character order.
class Alphabet {
public:
  Alphabet() = default;

  explicit Alphabet(std::string_view letters) {
    for (char c : letters) {
      if (c < 'a' || c > 'z')
        throw std::invalid_argument(std::string("alphabet symbol '") + c + "' is not a lowercase letter");
      letters_.push_back(c);
    }
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.empty()) throw std::invalid_argument("alphabet is empty");
  }

  static Alphabet lowercase() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

  bool contains(char c) const { return std::binary_search(letters_.begin(), letters_.end(), c); }
  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::string letters_;
};

class Factor;

/// Immutable; copies share their contents.
class BracketedWord {
public:
  /// Throws std::invalid_argument on an empty factor list or two adjacent brackets.
  explicit BracketedWord(std::vector<Factor> factors);

  static BracketedWord letter(char symbol);

  /// The word ⌊w⌋.
  static BracketedWord bracketed(BracketedWord inner);

  std::span<const Factor> factors() const { return rep_->factors; }
  std::size_t breadth() const { return rep_->factors.size(); }
  std::size_t depth() const { return rep_->depth; }
  /// 0 if the first factor is a letter, 1 if it is a bracket.
  int head() const;
  int tail() const;

  /// Byte string whose lexicographic order is the canonical order below:
  /// depth and breadth as fixed-width big-endian prefixes, then each factor
  /// as 0x01 letter or 0x02 followed by the inner key. Factor encodings are
  /// self-delimiting, so no key is a proper prefix of a different one at a
  /// point where the orders could disagree.
  const std::string& key() const { return rep_->key; }
  bool same_object(const BracketedWord& other) const { return rep_ == other.rep_; }
  std::size_t hash() const { return rep_->hash; }

private:
  friend class Factor;
  BracketedWord() = default;

  struct Rep {
    std::vector<Factor> factors;
    std::size_t depth = 0;
    std::string key;
    std::size_t hash = 0;

    void build_key();
  };

  std::shared_ptr<const Rep> rep_;
};

/// Either a letter or a bracket around a word.
class Factor {
public:
  static Factor letter(char symbol) {
    Factor f;
    f.symbol_ = symbol;
    return f;
  }
  static Factor bracket(BracketedWord inner) {
    Factor f;
    f.inner_ = std::move(inner);
    return f;
  }

  bool is_letter() const { return inner_.rep_ == nullptr; }
  bool is_bracket() const { return inner_.rep_ != nullptr; }
  char symbol() const { return symbol_; }
  const BracketedWord& inner() const { return inner_; }

private:
  char symbol_ = 0;
  BracketedWord inner_;
};

inline BracketedWord::BracketedWord(std::vector<Factor> factors) {
  if (factors.empty()) throw std::invalid_argument("bracketed word must be nonempty");
  auto rep = std::make_shared<Rep>();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Factor& f = factors[i];
    if (f.is_bracket()) {
      if (i > 0 && factors[i - 1].is_bracket())
        throw std::invalid_argument("adjacent brackets violate the alternating decomposition");
      rep->depth = std::max(rep->depth, f.inner().depth() + 1);
    }
  }
  rep->factors = std::move(factors);
  rep->build_key();
  rep->hash = std::hash<std::string>{}(rep->key);
  rep_ = std::move(rep);
}

inline BracketedWord BracketedWord::letter(char symbol) { return BracketedWord({Factor::letter(symbol)}); }

inline BracketedWord BracketedWord::bracketed(BracketedWord inner) {
  return BracketedWord({Factor::bracket(std::move(inner))});
}

inline int BracketedWord::head() const { return rep_->factors.front().is_bracket() ? 1 : 0; }
inline int BracketedWord::tail() const { return rep_->factors.back().is_bracket() ? 1 : 0; }

inline void BracketedWord::Rep::build_key() {
  std::size_t size = 8;
  for (const Factor& f : factors) size += f.is_letter() ? 2 : 1 + f.inner().key().size();
  key.reserve(size);
  auto put = [this](std::size_t n) {
    for (int shift = 24; shift >= 0; shift -= 8) key.push_back(static_cast<char>((n >> shift) & 0xff));
  };
  put(depth);
  put(factors.size());
  for (const Factor& f : factors) {
    if (f.is_letter()) {
      key.push_back('\x01');
      key.push_back(f.symbol());
    } else {
      key.push_back('\x02');
      key += f.inner().key();
    }
  }
}

inline std::size_t breadth(const BracketedWord& w) { return w.breadth(); }
inline std::size_t depth(const BracketedWord& w) { return w.depth(); }
inline int head(const BracketedWord& w) { return w.head(); }
inline int tail(const BracketedWord& w) { return w.tail(); }

inline std::strong_ordering compare(const BracketedWord& a, const BracketedWord& b);

inline std::strong_ordering compare(const Factor& a, const Factor& b) {
  if (a.is_letter() != b.is_letter()) return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_letter()) return a.symbol() <=> b.symbol();
  return compare(a.inner(), b.inner());
}

/// Canonical total order: depth, then breadth, then factor by factor with
/// letters before brackets, letters by alphabet position, brackets by their
/// inner words. Evaluated through the precomputed keys.
inline std::strong_ordering compare(const BracketedWord& a, const BracketedWord& b) {
  if (a.same_object(b)) return std::strong_ordering::equal;
  int c = a.key().compare(b.key());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

inline bool operator==(const BracketedWord& a, const BracketedWord& b) {
  return a.same_object(b) || (a.hash() == b.hash() && a.key() == b.key());
}
inline std::strong_ordering operator<=>(const BracketedWord& a, const BracketedWord& b) { return compare(a, b); }

struct WordLess {
  bool operator()(const BracketedWord& a, const BracketedWord& b) const { return compare(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const BracketedWord& w) const { return w.hash(); }
};

/// Concatenation uv. Throws if tail(u) and head(v) are both brackets.
inline BracketedWord concatenate(const BracketedWord& u, const BracketedWord& v) {
  std::vector<Factor> factors(u.factors().begin(), u.factors().end());
  factors.insert(factors.end(), v.factors().begin(), v.factors().end());
  return BracketedWord(std::move(factors));
}

/// Recursive check of the alternation invariant.
inline bool is_rbw(const BracketedWord& w) {
  auto f = w.factors();
  if (f.empty()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_bracket()) {
      if (i > 0 && f[i - 1].is_bracket()) return false;
      if (!is_rbw(f[i].inner())) return false;
    }
  }
  return true;
}

inline bool letters_in(const BracketedWord& w, const Alphabet& alphabet) {
  for (const Factor& f : w.factors()) {
    if (f.is_letter() ? !alphabet.contains(f.symbol()) : !letters_in(f.inner(), alphabet)) return false;
  }
  return true;
}

inline void print(const BracketedWord& w, std::string& out) {
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      out.push_back(f.symbol());
    } else {
      out.push_back('[');
      print(f.inner(), out);
      out.push_back(']');
    }
  }
}

inline std::string to_string(const BracketedWord& w) {
  std::string out;
  print(w, out);
  return out;
}

namespace detail {

/// Recursive-descent reader for `word := factor+ ; factor := letter | '[' word ']'`.
/// Whitespace between tokens is skipped.
class WordReader {
public:
  WordReader(std::string_view text, const Alphabet& alphabet, std::size_t offset = 0)
      : text_(text), alphabet_(alphabet), pos_(offset) {}

  BracketedWord word() {
    std::vector<Factor> factors;
    std::size_t last_bracket_start = 0;
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = text_[pos_];
      if (c == '[') {
        std::size_t start = pos_;
        if (!factors.empty() && factors.back().is_bracket())
          throw ParseError("adjacent brackets (after bracket opened at " + std::to_string(last_bracket_start) + ")", start);
        ++pos_;
        BracketedWord inner = word();
        skip_space();
        if (at_end() || text_[pos_] != ']') throw ParseError("expected ']'", pos_);
        ++pos_;
        factors.push_back(Factor::bracket(std::move(inner)));
        last_bracket_start = start;
      } else if (c >= 'a' && c <= 'z') {
        if (!alphabet_.contains(c))
          throw ParseError(std::string("letter '") + c + "' is not in the alphabet {" + alphabet_.letters() + "}", pos_);
        factors.push_back(Factor::letter(c));
        ++pos_;
      } else {
        break;
      }
    }
    if (factors.empty()) throw ParseError(at_end() ? "expected a word, found end of input" : std::string("expected a word, found '") + text_[pos_] + "'", pos_);
    return BracketedWord(std::move(factors));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }
  char peek() const { return text_[pos_]; }

private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_;
};

} // namespace detail

/// Parses the canonical text form of a word. Throws ParseError on syntax
/// errors, letters outside `alphabet`, and adjacent brackets.
inline BracketedWord parse_word(std::string_view text, const Alphabet& alphabet) {
  detail::WordReader reader(text, alphabet);
  BracketedWord w = reader.word();
  reader.skip_space();
  if (!reader.at_end()) throw ParseError(std::string("unexpected '") + reader.peek() + "'", reader.position());
  return w;
}

/// Deterministic generator used by the property tests and the sampling
/// checks. Draws come straight from mt19937_64 so streams are reproducible
/// across standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Random RBW: breadth uniform in [1, max_breadth]; at each position a
  /// bracket is chosen with probability 1/2 when admissible (depth budget
  /// left, previous factor not a bracket), otherwise a uniform letter.
  BracketedWord word(const Alphabet& alphabet, std::size_t max_depth, std::size_t max_breadth) {
    std::size_t n = 1 + below(max_breadth);
    std::vector<Factor> factors;
    factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool bracket_ok = max_depth > 0 && (factors.empty() || factors.back().is_letter());
      if (bracket_ok && below(2) == 1) {
        factors.push_back(Factor::bracket(word(alphabet, max_depth - 1, max_breadth)));
      } else {
        factors.push_back(Factor::letter(alphabet.letters()[below(alphabet.size())]));
      }
    }
    return BracketedWord(std::move(factors));
  }

  /// Rational with numerator in [-bound, bound] \ {0} and denominator in [1, 3].
  Rational coefficient(std::int64_t bound = 3) {
    std::int64_t num = 0;
    while (num == 0) num = between(-bound, bound);
    return Rational(num, between(1, 3));
  }

private:
  std::mt19937_64 engine_;
};

} // namespace erba

#endif
