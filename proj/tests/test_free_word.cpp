#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cpg/error.hpp"
#include "cpg/free_word.hpp"
#include "cpg/word_text.hpp"
#include "test_seed.hpp"

using namespace cpg;

namespace {

Word W(const char* s) { return parse_word(s); }

std::vector<Letter> random_letters(std::mt19937_64& rng, std::uint32_t gens, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> d(0, 2 * gens - 1);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto c = d(rng);
    out.push_back({c / 2, c % 2 ? -1 : 1});
  }
  return out;
}

// Deletes the leftmost cancelling pair until none is left.
std::vector<Letter> naive_reduce(std::vector<Letter> s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].is_inverse_of(s[i + 1])) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

std::vector<Letter> letters(const Word& w) { return {w.begin(), w.end()}; }

}  // namespace

TEST(Reduce, Examples) {
  const std::vector<Letter> a{gen(0), gen(1), inv(1), gen(2)};
  EXPECT_EQ(reduce(a), (Word{gen(0), gen(2)}));
  EXPECT_TRUE(reduce(std::vector<Letter>{}).empty());
  const std::vector<Letter> b{gen(0), inv(0), gen(0), inv(0)};
  EXPECT_TRUE(reduce(b).empty());
}

TEST(Reduce, MatchesNaiveEvaluator) {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = random_letters(rng, 3, trial % 20);
    const Word r = reduce(raw);
    EXPECT_EQ(letters(r), naive_reduce(raw));
    EXPECT_EQ(reduce(letters(r)), r);
  }
}

TEST(Reduce, ProductLengthBound) {
  std::mt19937_64 rng(test_seed() + 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = reduce(random_letters(rng, 2, 8));
    const Word v = reduce(random_letters(rng, 2, 8));
    const Word uv = multiply(u, v);
    EXPECT_LE(uv.size(), u.size() + v.size());
    auto cat = letters(u);
    cat.insert(cat.end(), v.begin(), v.end());
    EXPECT_EQ(letters(uv), naive_reduce(cat));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(W("x0 x1^-1")), W("x1 x0^-1"));
  EXPECT_TRUE(invert(Word{}).empty());
  EXPECT_EQ(invert(W("x2^2")), (Word{inv(2), inv(2)}));
  const Word u = W("x0 x2^-3 x1");
  EXPECT_EQ(invert(invert(u)), u);
  EXPECT_TRUE(multiply(u, invert(u)).empty());
}

TEST(CyclicallyReduce, Examples) {
  auto r = cyclically_reduce(W("x0^-1 x1 x0"));
  EXPECT_EQ(r.core.base(), W("x1"));
  EXPECT_EQ(r.conjugator, W("x0^-1"));

  r = cyclically_reduce(W("x1 x2^-1"));
  EXPECT_EQ(r.core.base(), W("x1 x2^-1"));
  EXPECT_TRUE(r.conjugator.empty());

  const std::vector<Letter> raw{gen(0), gen(1), inv(0), gen(0), inv(0)};
  r = cyclically_reduce(reduce(raw));
  EXPECT_EQ(r.core.base(), W("x1"));
  EXPECT_EQ(r.conjugator, W("x0"));
}

TEST(CyclicallyReduce, ReconstructsInput) {
  std::mt19937_64 rng(test_seed() + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word u = reduce(random_letters(rng, 3, trial % 16));
    const auto [c, g] = cyclically_reduce(u);
    EXPECT_TRUE(is_cyclically_reduced(c.base()));
    EXPECT_EQ(multiply(multiply(g, c.base()), invert(g)), u);
  }
}

TEST(CyclicWord, RejectsNonCyclicallyReduced) {
  EXPECT_THROW(CyclicWord(W("x0 x1 x0^-1")), Error);
  try {
    CyclicWord(W("x0 x1 x0^-1"));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCyclicallyReduced);
  }
  EXPECT_NO_THROW(CyclicWord(Word{}));
}

TEST(Rotations, Examples) {
  const auto r = rotations(CyclicWord(W("x0 x1 x2")));
  ASSERT_EQ(r.size(), 3U);
  EXPECT_EQ(r[0].base(), W("x0 x1 x2"));
  EXPECT_EQ(r[1].base(), W("x1 x2 x0"));
  EXPECT_EQ(r[2].base(), W("x2 x0 x1"));
  EXPECT_EQ(rotations(CyclicWord(W("x0"))).size(), 1U);
  const auto e = rotations(CyclicWord());
  ASSERT_EQ(e.size(), 1U);
  EXPECT_TRUE(e[0].empty());
}

TEST(Rotations, ClosedUnderComposition) {
  const CyclicWord c(W("x0 x1^-1 x2 x2 x1"));
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      EXPECT_EQ(c.rotated(a).rotated(b), c.rotated((a + b) % c.size()));
      EXPECT_TRUE(c.rotated(a).is_rotation_of(c));
      EXPECT_EQ(c.rotated(a).size(), c.size());
    }
  }
}

TEST(CyclicWord, CanonicalIsLeastRotation) {
  std::mt19937_64 rng(test_seed() + 3);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = reduce(random_letters(rng, 3, 1 + trial % 10));
    const CyclicWord c = cyclically_reduce(u).core;
    const auto all = rotations(c);
    EXPECT_EQ(c.canonical(), *std::min_element(all.begin(), all.end()));
    EXPECT_TRUE(c.inverse().is_conjugate_or_inverse_of(c));
  }
  // +1 sorts before -1 within an index.
  EXPECT_EQ(CyclicWord(W("x1 x0^-1 x1 x0")).canonical().base(), W("x0 x1 x0^-1 x1"));
  EXPECT_EQ(CyclicWord(W("x1 x0^-2")).canonical().base(), W("x0^-2 x1"));
}

TEST(ShiftSubscripts, Examples) {
  EXPECT_EQ(shift_subscripts(W("x0^-1 x1 x0 x1^-2"), 2, 3), W("x2^-1 x0 x2 x0^-2"));
  const Word u = W("x3 x1^-1 x0");
  EXPECT_EQ(shift_subscripts(u, 0, 4), u);
  EXPECT_EQ(shift_subscripts(W("x0 x2"), 1, 3), W("x1 x0"));
  EXPECT_THROW(shift_subscripts(W("x0 x3"), 1, 3), Error);
  for (long i = 0; i <= 4; ++i) EXPECT_EQ(shift_subscripts(shift_subscripts(u, i, 4), 4 - i, 4), u);
  EXPECT_EQ(shift_subscripts(u, 4, 4), u);
}

TEST(InvolvedIndices, Examples) {
  EXPECT_EQ(involved_indices(W("x0^-1 x2 x0 x2^-2")), (IndexSet{0, 2}));
  EXPECT_TRUE(involved_indices(Word{}).empty());
  EXPECT_EQ(involved_indices(W("x1^3")), (IndexSet{1}));
}

TEST(PrimitiveRoot, Examples) {
  auto p = primitive_root(W("x0 x1 x0 x1 x0 x1"));
  EXPECT_EQ(p.root, W("x0 x1"));
  EXPECT_EQ(p.power, 3);
  p = primitive_root(W("x0 x1 x2"));
  EXPECT_EQ(p.root, W("x0 x1 x2"));
  EXPECT_EQ(p.power, 1);
  p = primitive_root(W("x2^-4"));
  EXPECT_EQ(p.root, W("x2^-1"));
  EXPECT_EQ(p.power, 4);
  EXPECT_THROW(primitive_root(Word{}), Error);
  EXPECT_THROW(primitive_root(W("x0 x1 x0^-1")), Error);
}

TEST(PrimitiveRoot, RootIsMinimal) {
  std::mt19937_64 rng(test_seed() + 4);
  for (int trial = 0; trial < 500; ++trial) {
    const Word base = cyclically_reduce(reduce(random_letters(rng, 2, 1 + trial % 4))).core.base();
    if (base.empty()) continue;
    const long reps = 1 + trial % 4;
    const Word u = power(base, reps);
    const auto [root, m] = primitive_root(u);
    EXPECT_EQ(power(root, m), u);
    // No shorter period reproduces u.
    for (std::size_t d = 1; d < root.size(); ++d) {
      if (u.size() % d) continue;
      EXPECT_NE(power(u.subword(0, d), static_cast<long>(u.size() / d)), u);
    }
  }
}

TEST(WordText, RoundTrip) {
  EXPECT_EQ(format_word(W("x0^-1 x2 x0 x2^-2")), "x0^-1 x2 x0 x2^-2");
  EXPECT_EQ(format_word(Word{}), "1");
  EXPECT_TRUE(W("1").empty());
  EXPECT_EQ(format_word(W("x1 x1 x1^-1 x3")), "x1 x3");
  EXPECT_EQ(format_word(W("x5^3")), "x5^3");
  std::mt19937_64 rng(test_seed() + 5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = reduce(random_letters(rng, 4, trial % 12));
    EXPECT_EQ(parse_word(format_word(u)), u);
  }
}

TEST(WordText, ReportsErrorPosition) {
  for (const auto& [text, pos] : std::vector<std::pair<std::string, std::size_t>>{
           {"x0 y1", 3}, {"x0^0", 3}, {"x", 1}, {"x0^", 3}, {"", 0}, {"x0 1", 3}}) {
    try {
      parse_word(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
      EXPECT_EQ(e.code(), ErrorCode::kParse);
    }
  }
}
