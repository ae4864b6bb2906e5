#include <gtest/gtest.h>

#include "helpers.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/words.hpp"

using namespace knotrep;
using knotrep::testing::random_letters;
using knotrep::testing::random_word;

namespace {

AlphabetPtr sa() { return Alphabet::make(std::vector<Alphabet::Letter>{{"s", true}, {"a", false}}); }
AlphabetPtr st() { return Alphabet::make(std::vector<std::string>{"s", "t"}, true); }

// Letter-by-letter reduction with an explicit stack, kept apart from the
// syllable code under test.
std::vector<std::pair<std::uint32_t, int>> naive_reduce(const std::vector<Syllable>& raw) {
  std::vector<std::pair<std::uint32_t, int>> stack;
  for (const auto& s : raw) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      if (!stack.empty() && stack.back().first == s.gen.index && stack.back().second == -sign)
        stack.pop_back();
      else
        stack.emplace_back(s.gen.index, sign);
    }
  }
  return stack;
}

std::vector<std::pair<std::uint32_t, int>> letters(const Word& w) {
  std::vector<std::pair<std::uint32_t, int>> out;
  for (const auto& s : w.syllables())
    for (int k = 0; k < std::abs(s.exponent); ++k) out.emplace_back(s.gen.index, s.exponent > 0 ? 1 : -1);
  return out;
}

}  // namespace

TEST(Alphabet, RejectsBadNames) {
  EXPECT_THROW(Alphabet::make(std::vector<std::string>{"s", "s"}), InvalidInput);
  EXPECT_THROW(Alphabet::make(std::vector<std::string>{""}), InvalidInput);
  EXPECT_THROW(Alphabet::make(std::vector<std::string>{"a b"}), InvalidInput);
  EXPECT_THROW(sa()->id("q"), InvalidInput);
}

TEST(Word, ReduceCancelsAndMerges) {
  auto a = sa();
  EXPECT_TRUE(parse_word(a, "s s^-1").empty());
  EXPECT_EQ(to_string(parse_word(a, "s s a a^-1 s")), "s^3");
  EXPECT_EQ(to_string(parse_word(a, "a^2 s s^-1 a^-5")), "a^-3");
  EXPECT_EQ(parse_word(a, "a s a^-1 a s^-1 a^-1").length(), 0u);
}

TEST(Word, ReduceMatchesLetterStack) {
  auto a = sa();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto raw = random_letters(a, 30, rng);
    EXPECT_EQ(letters(Word::reduce(a, raw)), naive_reduce(raw));
  }
}

TEST(Word, ReductionIsIdempotent) {
  auto a = sa();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Word w = Word::reduce(a, random_letters(a, 40, rng));
    EXPECT_EQ(Word::reduce(a, w.syllables()), w);
    for (std::size_t k = 1; k < w.syllables().size(); ++k)
      EXPECT_NE(w.syllables()[k].gen, w.syllables()[k - 1].gen);
  }
}

TEST(Word, GroupLaws) {
  auto a = sa();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(a, 12, rng), v = random_word(a, 12, rng), w = random_word(a, 12, rng);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_TRUE((u * invert(u)).empty());
    EXPECT_EQ(invert(invert(u)), u);
    EXPECT_EQ(invert(u * v), invert(v) * invert(u));
    EXPECT_EQ(conjugate(u, v), invert(v) * u * v);
    EXPECT_EQ(power(u, 3), u * u * u);
    EXPECT_EQ(power(u, -2), invert(u * u));
  }
}

TEST(Word, MixedAlphabetsThrow) {
  EXPECT_THROW(parse_word(sa(), "s") * parse_word(Alphabet::make(std::vector<std::string>{"x"}), "x"),
               InvalidInput);
}

TEST(Word, ExponentSumIsAHomomorphism) {
  auto a = st();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Word u = random_word(a, 20, rng), v = random_word(a, 20, rng);
    EXPECT_EQ(exponent_sum(u * v), exponent_sum(u) + exponent_sum(v));
    EXPECT_EQ(exponent_sum(invert(u)), -exponent_sum(u));
  }
  EXPECT_EQ(exponent_sum(parse_word(a, "s t^-1 s^3")), 3);
  EXPECT_EQ(exponent_sum(Word(a)), 0);
}

TEST(Word, ExponentSumNeedsMeridians) {
  auto a = sa();
  EXPECT_EQ(exponent_sum(parse_word(a, "s^2")), 2);
  EXPECT_THROW(exponent_sum(parse_word(a, "s a")), InvalidInput);
}

TEST(Word, TextRoundTrip) {
  auto a = sa();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(a, 15, rng);
    EXPECT_EQ(parse_word(a, to_string(w)), w);
  }
  EXPECT_EQ(to_string(Word(a)), "1");
  EXPECT_TRUE(parse_word(a, "1").empty());
  EXPECT_TRUE(parse_word(a, "  ").empty());
  EXPECT_EQ(to_string(parse_word(a, "a^1 s^+2")), "a s^2");
}

TEST(Word, ParseErrors) {
  auto a = sa();
  EXPECT_THROW(parse_word(a, "q"), InvalidInput);
  EXPECT_THROW(parse_word(a, "s^"), InvalidInput);
  EXPECT_THROW(parse_word(a, "s^x"), InvalidInput);
  EXPECT_THROW(parse_word(a, "s^0"), InvalidInput);
}

TEST(WordMap, SubstitutionComposes) {
  auto a = sa();
  auto b = st();
  WordMap f(b, a);  // t -> a s
  f.set("s", "s");
  f.set("t", "a s");
  WordMap g(a, b);  // a -> t s^-1
  g.set("s", "s");
  g.set("a", "t s^-1");
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(b, 15, rng), v = random_word(b, 15, rng);
    EXPECT_EQ(apply_hom(apply_hom(u, f), g), u);
    EXPECT_EQ(apply_hom(u * v, f), apply_hom(u, f) * apply_hom(v, f));
  }
}

TEST(WordMap, MissingImageThrows) {
  WordMap f(sa(), st());
  f.set("s", "t");
  EXPECT_FALSE(f.complete());
  EXPECT_THROW(apply_hom(parse_word(f.source, "a"), f), InvalidInput);
  EXPECT_EQ(to_string(apply_hom(parse_word(f.source, "s^2"), f)), "t^2");
}

TEST(Word, RotationAndInversion) {
  auto a = sa();
  const Word r = parse_word(a, "a^-1 s^-1 a s a^-1 s a s^-1 a^-1");
  EXPECT_TRUE(equal_up_to_rotation_and_inversion(r, r));
  EXPECT_TRUE(equal_up_to_rotation_and_inversion(r, parse_word(a, "s a^-1 s a s^-1 a^-2 s^-1 a")));
  EXPECT_TRUE(equal_up_to_rotation_and_inversion(r, invert(r)));
  EXPECT_TRUE(equal_up_to_rotation_and_inversion(parse_word(a, "s a"), parse_word(a, "a s")));
  EXPECT_FALSE(equal_up_to_rotation_and_inversion(parse_word(a, "s a"), parse_word(a, "s a^-1")));
  EXPECT_FALSE(equal_up_to_rotation_and_inversion(parse_word(a, "s^2"), parse_word(a, "s")));
}

TEST(Word, CascadingCancellation) {
  auto a = Alphabet::make(std::vector<std::string>{"s", "t", "a"});
  const std::vector<Syllable> raw{{GeneratorId{0}, 1}, {GeneratorId{1}, -1}, {GeneratorId{1}, 1},
                                  {GeneratorId{0}, -1}, {GeneratorId{2}, 2}};
  EXPECT_EQ(to_string(Word::reduce(a, raw)), "a^2");
  const std::vector<Syllable> merge{{GeneratorId{0}, 2}, {GeneratorId{0}, 3}};
  EXPECT_EQ(to_string(Word::reduce(a, merge)), "s^5");
}

TEST(Word, SmallProducts) {
  auto a = Alphabet::make(std::vector<std::string>{"s", "t", "a"});
  EXPECT_EQ(to_string(parse_word(a, "s t") * parse_word(a, "t^-1")), "s");
  EXPECT_EQ(to_string(invert(parse_word(a, "s t^-1 s"))), "s^-1 t s^-1");
  EXPECT_EQ(to_string(conjugate(parse_word(a, "s^2"), parse_word(a, "a"))), "a^-1 s^2 a");
}

TEST(WordMap, PsiKillsLastRelator) {
  auto h = Alphabet::make(std::vector<std::string>{"y0", "y1", "y2", "y3", "y4", "y5"});
  auto f = Alphabet::make(std::vector<std::string>{"x", "y"});
  WordMap psi(h, f);
  const char* images[] = {"1", "x", "x", "1", "y", "1"};
  for (std::uint32_t i = 0; i < 6; ++i) psi.set(h->name(GeneratorId{i}), images[i]);
  EXPECT_TRUE(apply_hom(parse_word(h, "y2^-1 y3 y1 y5 y0^-1 y5^-1"), psi).empty());
  EXPECT_TRUE(apply_hom(Word(h), psi).empty());
  EXPECT_EQ(to_string(apply_hom(parse_word(h, "y4 y1"), psi)), "y x");
}
