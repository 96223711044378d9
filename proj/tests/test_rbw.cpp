#include "erba/rbw.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace erba;

namespace {

const Alphabet xyz("xyz");

BracketedWord w(std::string_view text) { return parse_word(text, xyz); }

// Straight structural recursion, independent of the byte keys the library
// compares with.
int structural_compare(const BracketedWord& a, const BracketedWord& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
  if (a.breadth() != b.breadth()) return a.breadth() < b.breadth() ? -1 : 1;
  for (std::size_t i = 0; i < a.breadth(); ++i) {
    const Factor& fa = a.factors()[i];
    const Factor& fb = b.factors()[i];
    if (fa.is_letter() != fb.is_letter()) return fa.is_letter() ? -1 : 1;
    if (fa.is_letter()) {
      if (fa.symbol() != fb.symbol()) return fa.symbol() < fb.symbol() ? -1 : 1;
      continue;
    }
    if (int c = structural_compare(fa.inner(), fb.inner()); c != 0) return c;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

// Words as strings, built level by level: level 0 is the free semigroup on
// the letters (runs up to length 2), level n alternates runs with brackets
// around level n-1 words. Breadth is capped at 3 factor blocks.
std::set<std::string> level(int n) {
  std::vector<std::string> runs{"x", "y", "xx", "xy", "yx", "yy"};
  if (n == 0) return {runs.begin(), runs.end()};
  std::set<std::string> below = level(n - 1);
  std::vector<std::string> blocks;
  for (const auto& b : below)
    if (b.size() <= 6) blocks.push_back("[" + b + "]");
  std::set<std::string> out;
  // Alternating sequences of up to three blocks: r, b, rb, br, rbr, brb.
  for (const auto& r : runs) out.insert(r);
  for (const auto& b : blocks) {
    out.insert(b);
    for (const auto& r : runs) {
      out.insert(r + b);
      out.insert(b + r);
      for (const auto& r2 : runs) out.insert(r + b + r2);
      for (const auto& b2 : blocks) out.insert(b + r + b2);
    }
  }
  return out;
}

} // namespace

TEST(Parse, LettersAndBrackets) {
  BracketedWord a = w("x[y]z");
  ASSERT_EQ(a.breadth(), 3u);
  EXPECT_TRUE(a.factors()[0].is_letter());
  EXPECT_EQ(a.factors()[0].symbol(), 'x');
  ASSERT_TRUE(a.factors()[1].is_bracket());
  EXPECT_EQ(to_string(a.factors()[1].inner()), "y");
  EXPECT_EQ(a.factors()[2].symbol(), 'z');

  BracketedWord b = w("[[x]]");
  ASSERT_EQ(b.breadth(), 1u);
  EXPECT_EQ(to_string(b.factors()[0].inner()), "[x]");
}

TEST(Parse, Errors) {
  EXPECT_THROW(w("[x][y]"), ParseError);
  EXPECT_THROW(w("x[[x][y]]"), ParseError);
  EXPECT_THROW(w(""), ParseError);
  EXPECT_THROW(w("   "), ParseError);
  EXPECT_THROW(w("xa"), ParseError);
  EXPECT_THROW(w("[x"), ParseError);
  EXPECT_THROW(w("x]"), ParseError);
  EXPECT_THROW(w("[]"), ParseError);
  try {
    w("x[y][z]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, WhitespaceIsIgnored) { EXPECT_EQ(w(" x [ y ] z "), w("x[y]z")); }

TEST(Print, Canonical) {
  EXPECT_EQ(to_string(w("x[y]z")), "x[y]z");
  EXPECT_EQ(to_string(w("[x[y]]")), "[x[y]]");
  EXPECT_EQ(to_string(w("xyz")), "xyz");
}

TEST(Shape, BreadthDepthHeadTail) {
  EXPECT_EQ(breadth(w("x[y]z")), 3u);
  EXPECT_EQ(breadth(w("[x[y]]")), 1u);
  EXPECT_EQ(breadth(w("xyz")), 3u);
  EXPECT_EQ(depth(w("xyz")), 0u);
  EXPECT_EQ(depth(w("x[y]z")), 1u);
  EXPECT_EQ(depth(w("[x[y]]")), 2u);
  EXPECT_EQ(head(w("x[y]")), 0);
  EXPECT_EQ(tail(w("x[y]")), 1);
  EXPECT_EQ(head(w("[x]y")), 1);
  EXPECT_EQ(tail(w("[x]y")), 0);
  EXPECT_EQ(head(w("xyz")), 0);
  EXPECT_EQ(tail(w("xyz")), 0);
}

TEST(Shape, DepthIsFirstLevelContainingTheWord) {
  Alphabet xy("xy");
  std::set<std::string> seen;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& text : level(n)) {
      if (seen.count(text)) continue;
      seen.insert(text);
      EXPECT_EQ(parse_word(text, xy).depth(), static_cast<std::size_t>(n)) << text;
    }
  }
  EXPECT_TRUE(level(2).count("[x[y]]"));
  EXPECT_FALSE(level(1).count("[x[y]]"));
}

TEST(Shape, ConstructionRejectsAdjacentBrackets) {
  auto b = Factor::bracket(BracketedWord::letter('x'));
  EXPECT_THROW(BracketedWord({b, b}), std::invalid_argument);
  EXPECT_THROW(BracketedWord(std::vector<Factor>{}), std::invalid_argument);
}

TEST(Compare, Examples) {
  EXPECT_TRUE(compare(w("xyz"), w("x[y]z")) < 0);
  EXPECT_TRUE(compare(w("x[y]"), w("[x]y")) < 0);
  EXPECT_TRUE(compare(w("x[y]"), w("x[y]")) == 0);
}

TEST(Compare, MatchesStructuralOrderAndIsTotal) {
  Sampler rng(11);
  std::vector<BracketedWord> words;
  for (int i = 0; i < 300; ++i) words.push_back(rng.word(xyz, 3, 3));
  for (const auto& a : words)
    for (const auto& b : words) {
      ASSERT_EQ(sign(compare(a, b)), structural_compare(a, b)) << to_string(a) << " vs " << to_string(b);
      ASSERT_EQ(sign(compare(a, b)), -sign(compare(b, a)));
      ASSERT_EQ(compare(a, b) == 0, to_string(a) == to_string(b));
    }
  std::vector<BracketedWord> sorted = words;
  std::sort(sorted.begin(), sorted.end(), WordLess{});
  for (std::size_t i = 1; i < sorted.size(); ++i) EXPECT_LE(structural_compare(sorted[i - 1], sorted[i]), 0);
}

TEST(RoundTrip, RandomWords) {
  Sampler rng(5);
  for (int i = 0; i < 1000; ++i) {
    BracketedWord a = rng.word(xyz, 4, 4);
    ASSERT_TRUE(is_rbw(a));
    ASSERT_LE(a.depth(), 4u);
    ASSERT_LE(a.breadth(), 4u);
    EXPECT_EQ(w(to_string(a)), a);
  }
}

TEST(Properties, BracketAndConcatenation) {
  Sampler rng(17);
  for (int i = 0; i < 200; ++i) {
    BracketedWord u = rng.word(xyz, 3, 3), v = rng.word(xyz, 3, 3);
    BracketedWord bu = BracketedWord::bracketed(u);
    EXPECT_EQ(bu.depth(), u.depth() + 1);
    EXPECT_EQ(bu.breadth(), 1u);
    if (u.tail() == 1 && v.head() == 1) {
      EXPECT_THROW(concatenate(u, v), std::invalid_argument);
    } else {
      BracketedWord uv = concatenate(u, v);
      EXPECT_EQ(uv.breadth(), u.breadth() + v.breadth());
      EXPECT_EQ(to_string(uv), to_string(u) + to_string(v));
    }
  }
}

TEST(Alphabet, LettersAreChecked) {
  EXPECT_TRUE(letters_in(w("x[y]"), xyz));
  EXPECT_FALSE(letters_in(parse_word("a[b]", Alphabet::lowercase()), xyz));
  EXPECT_THROW(parse_word("x", Alphabet("ab")), ParseError);
}

TEST(Sampler, Deterministic) {
  Sampler a(3), b(3);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.word(xyz, 3, 3), b.word(xyz, 3, 3));
}
