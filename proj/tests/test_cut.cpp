#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "iwb/checker.hpp"
#include "iwb/coding.hpp"
#include "iwb/cut.hpp"
#include "iwb/model.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;

namespace {

Formula A(std::string_view s) {
  Signature g = Signature::arithmetic_language();
  g.add("Jp", 1);
  return read_formula(s, &g);
}

std::size_t floor_log2_plus1(std::size_t n) { return n == 0 ? 1 : static_cast<std::size_t>(std::log2(n)) + 1; }

// Terms at which forall_e instantiates the doubling lemmas, outermost first.
std::vector<Code> chain(const Proof& p) {
  std::vector<Code> out;
  const Proof* q = &p;
  while (q->rule() == Rule::ImpE && q->premise(0).rule() == Rule::ForallE) {
    out.push_back(eval_term(*q->premise(0).term(), {}));
    q = &q->premise(1);
  }
  return out;
}

// Prefix model of size n with Jp tabled as `ext`.
Structure prefix(std::size_t n, const std::set<Elem>& ext) {
  Structure M;
  M.sig = Signature::arithmetic_language();
  M.sig.add("Jp", 1);
  M.size = n;
  M.tables["Jp"];
  for (Elem e : ext) M.set("Jp", {e});
  return M;
}

std::set<Elem> extension(const Structure& M, const Formula& J) {
  std::set<Elem> out;
  Var x = *J.free_vars().begin();
  for (Elem e = 0; e < M.size; ++e)
    if (eval(M, J, {{x, e}})) out.insert(e);
  return out;
}

// Direct computation of close_cut's stages on a prefix {0..n-1}: a stage
// applied to an undefined value is vacuously true, like a bounded
// quantifier with an undefined bound.
std::set<Elem> oracle_closure(std::size_t n, const std::set<Elem>& j0) {
  using V = std::optional<std::size_t>;
  auto def = [&](std::size_t v) { return v < n ? V(v) : std::nullopt; };
  auto bits = [](std::size_t v) {
    std::size_t b = 0;
    while (v) ++b, v >>= 1;
    return b;
  };
  using Stage = std::function<bool(V)>;
  Stage i1 = [&](V t) {
    if (!t || *t + 1 >= n) return true;
    for (std::size_t y = 0; y <= *t; ++y)
      if (!j0.count(y)) return false;
    return true;
  };
  auto shorten = [&](Stage prev, std::function<V(std::size_t, std::size_t)> op) -> Stage {
    return [&n, prev, op](V t) {
      if (!prev(t)) return false;
      for (std::size_t y = 0; y < n; ++y)
        if (prev(y) && !prev(t ? op(y, *t) : std::nullopt)) return false;
      return true;
    };
  };
  Stage i2 = shorten(i1, [&](std::size_t a, std::size_t b) { return def(a + b); });
  Stage i3 = shorten(i2, [&](std::size_t a, std::size_t b) { return def(a * b); });
  Stage j = shorten(i3, [&](std::size_t a, std::size_t b) {
    std::size_t e = bits(a) * bits(b);
    return e < 40 ? def(std::size_t{1} << e) : std::nullopt;
  });
  std::set<Elem> out;
  for (std::size_t x = 0; x < n; ++x)
    if (j(x)) out.insert(x);
  return out;
}

}  // namespace

TEST(CutObligations, FourClausesAndErrors) {
  auto ob = cut_obligations(A("(= x x)"));
  ASSERT_EQ(ob.size(), 4u);
  EXPECT_EQ(print(ob[0]), "(and (= 0 0) (forall x (-> (= x x) (= (S x) (S x)))))");
  EXPECT_EQ(print(ob[3]), "(forall x (-> (= x x) (= (# x x) (# x x))))");
  for (const auto& f : ob) EXPECT_TRUE(f.is_sentence());
  EXPECT_THROW(cut_obligations(A("(= x y)")), CutError);
  EXPECT_THROW(cut_obligations(A("(= 0 0)")), CutError);
}

TEST(CutObligations, TrivialCutProofsCheck) {
  CutSpec c = trivial_cut(base_arithmetic());
  EXPECT_NO_THROW(c.validate());
  std::swap(c.obligations[0], c.obligations[1]);
  EXPECT_THROW(c.validate(), CutError);
}

TEST(CutMembership, ZeroAndEighteen) {
  CutSpec c = trivial_cut(base_arithmetic());
  Proof p0 = prove_cut_membership(c, 0);
  EXPECT_EQ(print(check_proof(p0, c.U, true).conclusion), "(= 0 0)");
  Proof p18 = prove_cut_membership(c, 18);
  CheckResult r = check_proof(p18, c.U, true);
  EXPECT_TRUE(alpha_equal(r.conclusion, cut_at(c.J, numeral(18))));
  // The proof climbs 0 -> 1 -> 2 -> 4 -> 9 -> 18.
  EXPECT_EQ(chain(p18), (std::vector<Code>{9, 4, 2, 1, 0}));
}

TEST(CutMembership, LogarithmicSizeAndRecheck) {
  CutSpec c = trivial_cut(base_arithmetic());
  std::size_t worst = 0;
  double ratio = 0;
  for (std::size_t n = 0; n <= 5000; n += (n < 300 ? 1 : 97)) {
    Proof p = prove_cut_membership(c, n);
    ASSERT_TRUE(alpha_equal(check_proof(p, c.U, true).conclusion, cut_at(c.J, numeral(n)))) << n;
    ratio = std::max(ratio, static_cast<double>(p.size()) / static_cast<double>(floor_log2_plus1(n)));
    worst = std::max(worst, p.size());
  }
  // Each bit adds one instance of a fixed lemma.
  EXPECT_LE(ratio, 60.0);
  EXPECT_LE(prove_cut_membership(c, 100000).size(), static_cast<std::size_t>(60 * 17));
}

TEST(CutMembership, NeedsObligations) {
  CutSpec c = trivial_cut(base_arithmetic());
  c.obligations[2].reset();
  EXPECT_THROW(prove_cut_membership(c, 5), CutError);
}

TEST(TermClosure, Examples) {
  CutSpec c = trivial_cut(base_arithmetic());
  for (const char* t : {"x", "(+ x y)", "(+ (* x y) (# x x))", "(S (S 0))"}) {
    Term term = read_term(t);
    Proof p = prove_term_closure(c, term);
    CheckResult r = check_proof(p, c.U, true);
    EXPECT_TRUE(r.conclusion.is_sentence()) << t;
    Formula f = r.conclusion;
    while (f.is(Formula::Kind::Forall)) f = f.body();
    EXPECT_TRUE(alpha_equal(f.rhs(), cut_at(c.J, term))) << t << " " << print(r.conclusion);
  }
  EXPECT_EQ(print(check_proof(prove_term_closure(c, read_term("(+ x y)")), c.U, true).conclusion),
            "(forall x (forall y (-> (and (= x x) (= y y)) (= (+ x y) (+ x y)))))");
  EXPECT_THROW(prove_term_closure(c, read_term("(len x)")), CutError);
  EXPECT_THROW(prove_term_closure(c, read_term("(# x y)")), CutError);
}

TEST(CloseCut, TopLikeUnchangedOnPrefix) {
  Formula J = close_cut(A("(Jp x)"));
  std::set<Elem> all;
  for (Elem e = 0; e < 12; ++e) all.insert(e);
  EXPECT_EQ(extension(prefix(12, all), J), all);
  EXPECT_EQ(J.free_vars(), (std::set<Var>{0}));
}

TEST(CloseCut, ShrinksAndMatchesDirectComputation) {
  Formula J = close_cut(A("(Jp x)"));
  for (std::size_t cutoff : {2u, 4u, 8u}) {
    std::set<Elem> j0;
    for (Elem e = 0; e < cutoff; ++e) j0.insert(e);
    Structure M = prefix(16, j0);
    std::set<Elem> ext = extension(M, J);
    EXPECT_EQ(ext, oracle_closure(16, j0)) << cutoff;
    EXPECT_TRUE(std::includes(j0.begin(), j0.end(), ext.begin(), ext.end()));
    EXPECT_LT(ext.size(), j0.size());
  }
  // Irregular starting sets, including the top element whose successor is undefined.
  for (std::set<Elem> j0 : {std::set<Elem>{}, std::set<Elem>{0, 2, 4, 6, 15}, std::set<Elem>{0, 1, 2, 3, 15}}) {
    EXPECT_EQ(extension(prefix(16, j0), J), oracle_closure(16, j0));
  }
}
