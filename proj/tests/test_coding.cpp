#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "iwb/coding.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;

namespace {

// All words over {0..a-1} in length-first, then alphabetic order.
std::vector<std::vector<std::size_t>> enumerate(std::size_t a, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer)
      for (std::size_t d = 0; d < a; ++d) {
        auto v = w;
        v.push_back(d);
        next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Encode, EmptyStringIsZero) {
  EXPECT_EQ(encode(std::vector<std::size_t>{}, 2), 0);
  EXPECT_TRUE(decode(Code(0), 2).empty());
}

TEST(Encode, ShortBinaryStringsOccupyFirstFifteenCodes) {
  auto words = enumerate(2, 3);
  ASSERT_EQ(words.size(), 15u);
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(encode(words[i], 2), Code(static_cast<unsigned long>(i)));
  EXPECT_EQ(encode(std::vector<std::size_t>{0, 0, 0, 0}, 2), 15);
}

TEST(Encode, MatchesEnumerationOracle) {
  Alphabet A = Alphabet::of_chars("abc");
  auto words = enumerate(3, 3);
  std::size_t pos = std::find(words.begin(), words.end(), std::vector<std::size_t>{2, 0, 1}) - words.begin();
  EXPECT_EQ(encode("cab", A), Code(static_cast<unsigned long>(pos)));
  EXPECT_EQ(decode(Code(1), Alphabet::of_chars("01")), "0");
}

TEST(Encode, RejectsForeignSymbols) {
  EXPECT_THROW(encode("abd", Alphabet::of_chars("abc")), std::invalid_argument);
}

TEST(Encode, RoundTripRandomCodes) {
  std::mt19937_64 rng(11);
  gmp_randclass r(gmp_randinit_default);
  r.seed(5);
  for (std::size_t a : {2, 3, 5, 47}) {
    for (int i = 0; i < 2000; ++i) {
      Code c = r.get_z_bits(static_cast<unsigned long>(1 + rng() % 200));
      EXPECT_EQ(encode(decode(c, a), a), c);
    }
  }
}

TEST(Encode, LongerStringsHaveLargerCodes) {
  for (std::size_t a : {2, 3, 4}) {
    auto words = enumerate(a, 5);
    for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LT(encode(words[i - 1], a), encode(words[i], a));
  }
}

TEST(Alphabet, MultiCharacterSymbolsFromLines) {
  Alphabet A = Alphabet::from_lines("forall\nexists\n\nx\n");
  EXPECT_EQ(A.size(), 3u);
  EXPECT_EQ(decode(encode("x forall", A), A), "x forall");
}

TEST(SyntaxCode, SubformulasHaveSmallerCodes) {
  Signature sig("s");
  sig.add("P", 1);
  sig.add("R", 2);
  Formula f = read_formula("(forall x (-> (exists y (R x y)) (not (P x))))", &sig);
  std::vector<Formula> subs;
  f.subformulas(subs);
  Code whole = code_syntax(f, sig);
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_LT(code_syntax(subs[i], sig), whole);
}

TEST(Numeral, Examples) {
  EXPECT_EQ(numeral(0), Term::zero());
  EXPECT_EQ(print(numeral(2)), "(* (S (S 0)) (S (* (S (S 0)) 0)))");
  EXPECT_EQ(eval_term(numeral(2)), 2);
}

TEST(Numeral, ValueAndLogarithmicLength) {
  // Fitted: each binary digit adds (* (S (S 0)) _) = 4 symbols, plus S for a 1 bit.
  const std::size_t c = 5;
  for (unsigned long n = 0; n <= 20000; ++n) {
    Term t = numeral(n);
    ASSERT_EQ(eval_term(t), n);
    std::size_t bits = n == 0 ? 1 : len(Code(n));
    ASSERT_LE(t.length(), c * bits + 1) << n;
  }
}

TEST(Growth, LenSmashOmega) {
  EXPECT_EQ(len(0), 0u);
  EXPECT_EQ(len(1), 1u);
  EXPECT_EQ(len(7), 3u);
  for (unsigned long x = 1; x <= 100; ++x) {
    Code expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, len(Code(x)));
    EXPECT_EQ(smash(x, 1), expect);
  }
  for (unsigned long x = 0; x <= 1000; ++x) EXPECT_EQ(omega1(x), smash(x, x));
}

TEST(Growth, BitBudget) {
  std::size_t saved = bit_budget();
  set_bit_budget(64);
  Code big = Code(1) << 40;
  EXPECT_THROW(smash(big, big), ResourceLimit);
  EXPECT_NO_THROW(smash(Code(15), Code(15)));
  set_bit_budget(saved);
}

TEST(EvalTerm, AllFunctionSymbols) {
  Term t = read_term("(+ (* x (S (S 0))) (# (len y) (half y)))");
  Code v = eval_term(t, {{0, 5}, {1, 9}});
  // 5*2 + 2^{|4|*|4|} = 10 + 2^9
  EXPECT_EQ(v, 10 + 512);
  EXPECT_THROW(eval_term(read_term("z")), std::invalid_argument);
}
