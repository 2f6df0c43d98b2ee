#include <gtest/gtest.h>

#include "iwb/arith.hpp"
#include "iwb/checker.hpp"
#include "iwb/proof_kit.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;

namespace {

Signature small_sig() {
  Signature s("pq");
  s.add("P", 1);
  s.add("Q", 1);
  s.add("R", 2);
  return s;
}

TheorySpec small_theory() {
  TheorySpec t("small", small_sig());
  t.add_axiom(read_formula("(forall x (-> (P x) (Q x)))"));
  t.add_axiom(read_formula("(forall x (P x))"));
  return t;
}

Formula F(std::string_view s) { return read_formula(s); }

// forall x (P x and Q x) from the two axioms.
Proof and_figure(const TheorySpec& T) {
  Formula ax1 = F("(forall x (-> (P x) (Q x)))");
  Formula ax2 = F("(forall x (P x))");
  Term x = Term::var(0);
  Proof a1 = Proof::axiom(ax1, T.code(ax1));
  Proof px = Proof::forall_e(Proof::axiom(ax2, T.code(ax2)), x);
  Proof q = kit::mp(Proof::forall_e(a1, x), px);
  return Proof::forall_i(F("(forall x (and (P x) (Q x)))"), 0, Proof::and_i(px, q));
}

}  // namespace

TEST(Checker, AcceptsConjunctionFigure) {
  TheorySpec T = small_theory();
  Proof p = and_figure(T);
  CheckResult r = check_proof(p, T, true);
  EXPECT_EQ(print(r.conclusion), "(forall x (and (P x) (Q x)))");
  EXPECT_TRUE(r.open.empty());
}

TEST(Checker, ImplicationIntroductionDischarges) {
  TheorySpec T("t", small_sig());
  Proof a = Proof::assume("h", F("(and (P x) (Q x))"));
  Proof p = Proof::imp_i(F("(and (P x) (Q x))"), "h", Proof::and_e2(a));
  Proof g = Proof::forall_i(F("(forall x (-> (and (P x) (Q x)) (Q x)))"), 0, p);
  CheckResult r = check_proof(g, T, true);
  EXPECT_TRUE(r.open.empty());
}

TEST(Checker, ReportsOpenAssumptions) {
  TheorySpec T("t", small_sig());
  Proof a = Proof::assume("h", F("(P y)"));
  CheckResult r = check_proof(Proof::or_i1(a, F("(Q y)")), T);
  ASSERT_EQ(r.open.size(), 1u);
  EXPECT_EQ(r.open[0].label, "h");
  EXPECT_THROW(check_proof(a, T, true), ProofError);
}

TEST(Checker, EigenvariableCondition) {
  TheorySpec T("t", small_sig());
  Proof a = Proof::assume("h", F("(P x)"));
  Proof bad = Proof::forall_i(F("(forall x (P x))"), 0, a);
  EXPECT_THROW(check_proof(bad, T), ProofError);
}

TEST(Checker, RejectsUnknownAxiomAndWrongCode) {
  TheorySpec T = small_theory();
  Formula f = F("(forall x (Q x))");
  EXPECT_THROW(check_proof(Proof::axiom(f, T.code(f)), T), ProofError);
  Formula g = F("(forall x (P x))");
  EXPECT_THROW(check_proof(Proof::axiom(g, T.code(g) + 1), T), ProofError);
  EXPECT_NO_THROW(check_proof(Proof::axiom(g, -1), T));
}

TEST(Checker, MutationsAreCaught) {
  TheorySpec T = small_theory();
  Proof p = and_figure(T);
  // Swap the conjuncts in the stored conclusion.
  Proof::Node n = p.node();
  n.conclusion = F("(forall x (and (Q x) (P x)))");
  EXPECT_THROW(check_proof(Proof::make(n), T), ProofError);
  // Instantiate with the wrong term.
  Formula ax1 = F("(forall x (-> (P x) (Q x)))");
  Proof bad = Proof::forall_e(Proof::axiom(ax1, T.code(ax1)), read_term("y"));
  Proof::Node m = bad.node();
  m.conclusion = F("(-> (P x) (Q x))");
  EXPECT_THROW(check_proof(Proof::make(m), T), ProofError);
}

TEST(Checker, ErrorNamesNodePath) {
  TheorySpec T = small_theory();
  Proof good = and_figure(T);
  Proof bad_leaf = Proof::axiom(F("(forall x (Q x))"), 0);
  Proof p = Proof::and_i(good, bad_leaf);
  try {
    check_proof(p, T);
    FAIL();
  } catch (const ProofError& e) {
    EXPECT_EQ(e.path, "1");
  }
}

TEST(ProofIO, RoundTrip) {
  TheorySpec T = small_theory();
  Proof p = and_figure(T);
  std::string text = print(p);
  Proof q = read_proof(text);
  EXPECT_EQ(print(q), text);
  EXPECT_NO_THROW(check_proof(q, T, true));
}

TEST(ProofIO, AxiomCodeOptional) {
  TheorySpec T = small_theory();
  Proof p = read_proof("(axiom (forall x (P x)))");
  EXPECT_EQ(p.code(), -1);
  EXPECT_NO_THROW(check_proof(p, T, true));
}

TEST(Restricted, VerdictMonotoneInBound) {
  TheorySpec T = small_theory();
  Proof p = and_figure(T);
  ProofStats st = proof_stats(p, T);
  EXPECT_EQ(st.max_rho, 1u);
  Code need = st.max_axiom_code;
  EXPECT_FALSE(check_restricted(p, T, need - 1).ok);
  EXPECT_TRUE(check_restricted(p, T, need).ok);
  bool seen_ok = false;
  for (Code n = 0; n <= need + 3; n += 1 + need / 20) {
    bool ok = check_restricted(p, T, n).ok;
    if (seen_ok) EXPECT_TRUE(ok);
    seen_ok = seen_ok || ok;
  }
}

TEST(Restricted, RhoTriggersRejection) {
  TheorySpec T("t", small_sig());
  Formula f = F("(-> (forall x (exists y (R x y))) (forall x (exists y (R x y))))");
  Proof p = Proof::imp_i(f.lhs(), "h", Proof::assume("h", f.lhs()));
  // rho of the implication is 3: its antecedent has sigma 3, pi 2.
  RestrictedVerdict v = check_restricted(p, T, 2);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.path, "");
  EXPECT_TRUE(check_restricted(p, T, 3).ok);
}

TEST(Arith, TwoPlusTwo) {
  TheorySpec B = base_arithmetic();
  Formula f = F("(= (+ (S (S 0)) (S (S 0))) (S (S (S (S 0)))))");
  Proof p = prove_true_bounded(f, B);
  CheckResult r = check_proof(p, B, true);
  EXPECT_TRUE(alpha_equal(r.conclusion, f));
}

TEST(Arith, BoundedExistential) {
  TheorySpec B = base_arithmetic();
  Formula f = F("(bex x (S (S (S 0))) (= x (S (S 0))))");
  Proof p = prove_true_bounded(f, B);
  EXPECT_TRUE(alpha_equal(check_proof(p, B, true).conclusion, f));
}

TEST(Arith, MixedSentences) {
  TheorySpec B = base_arithmetic();
  const char* corpus[] = {
      "(= 0 0)",
      "(not (= (S 0) 0))",
      "(< (* (S (S 0)) (S (S 0))) (S (S (S (S (S 0))))))",
      "(ball x (S (S (S 0))) (<= (* x x) (S (S (S (S 0))))))",
      "(ball x (S (S 0)) (bex y (S (S (S 0))) (= (S x) y)))",
      "(exists x (= (+ x x) (S (S (S (S 0))))))",
      "(not (forall x (< x (S (S 0)))))",
  };
  for (const char* s : corpus) {
    Formula f = F(s);
    ASSERT_TRUE(holds_in_N(f)) << s;
    Proof p = prove_true_bounded(f, B);
    EXPECT_TRUE(alpha_equal(check_proof(p, B, true).conclusion, f)) << s;
  }
}

TEST(Arith, FalseAndOutside) {
  TheorySpec B = base_arithmetic();
  EXPECT_THROW(prove_true_bounded(F("(= (S 0) 0)"), B), FalseSentence);
  EXPECT_THROW(prove_true_bounded(F("(forall x (= x x))"), B), OutsideFragment);
  EXPECT_FALSE(holds_in_N(F("(bex x (S (S 0)) (= x (S (S 0))))")));
}

TEST(Arith, EvaluationOfNumerals) {
  TheorySpec B = base_arithmetic();
  for (unsigned long n : {0ul, 1ul, 5ul, 12ul}) {
    Proof p = prove_evaluation(numeral(n), B);
    CheckResult r = check_proof(p, B, true);
    EXPECT_EQ(r.conclusion, Formula::atom(Symbol::identity(), {numeral(n), unary(n)}));
  }
}
