#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "iwb/syntax.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;

namespace {

Formula F(std::string_view s) { return read_formula(s); }

// Tiny evaluator used as an oracle: relations over {0..n-1}, S is successor
// modulo n. Written separately from the model module.
struct Toy {
  int n;
  std::map<std::string, std::set<std::vector<int>>> rel;

  int term(const Term& t, std::map<Var, int>& env) const {
    if (t.is_var()) return env.at(t.var_index());
    if (t.fn() == Fn::Zero) return 0;
    return (term(t.args()[0], env) + 1) % n;
  }

  bool holds(const Formula& f, std::map<Var, int>& env) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom: {
        std::vector<int> v;
        for (const auto& t : f.terms()) v.push_back(term(t, env));
        if (f.rel().name() == "=") return v[0] == v[1];
        auto it = rel.find(f.rel().name());
        return it != rel.end() && it->second.count(v);
      }
      case K::Bot: return false;
      case K::Not: return !holds(f.lhs(), env);
      case K::And: return holds(f.lhs(), env) && holds(f.rhs(), env);
      case K::Or: return holds(f.lhs(), env) || holds(f.rhs(), env);
      case K::Imp: return !holds(f.lhs(), env) || holds(f.rhs(), env);
      default: {
        bool all = f.is(K::Forall);
        auto saved = env.count(f.bound_var()) ? std::optional<int>(env[f.bound_var()]) : std::nullopt;
        bool result = all;
        for (int d = 0; d < n; ++d) {
          env[f.bound_var()] = d;
          if (holds(f.body(), env) != all) {
            result = !all;
            break;
          }
        }
        if (saved) env[f.bound_var()] = *saved;
        else env.erase(f.bound_var());
        return result;
      }
    }
  }
};

std::set<Var> free_oracle(const Formula& f, std::set<Var> bound = {}) {
  using K = Formula::Kind;
  std::set<Var> out;
  std::function<void(const Term&)> term = [&](const Term& t) {
    if (t.is_var()) {
      if (!bound.count(t.var_index())) out.insert(t.var_index());
    } else {
      for (const auto& a : t.args()) term(a);
    }
  };
  switch (f.kind()) {
    case K::Atom:
      for (const auto& t : f.terms()) term(t);
      break;
    case K::Bot: break;
    case K::Not: out = free_oracle(f.lhs(), bound); break;
    case K::And:
    case K::Or:
    case K::Imp: {
      out = free_oracle(f.lhs(), bound);
      auto r = free_oracle(f.rhs(), bound);
      out.insert(r.begin(), r.end());
      break;
    }
    default: {
      if (f.is_bounded_quantifier()) term(f.bound());
      auto b = bound;
      b.insert(f.bound_var());
      auto r = free_oracle(f.body(), b);
      out.insert(r.begin(), r.end());
    }
  }
  return out;
}

}  // namespace

TEST(FreeVars, Examples) {
  EXPECT_EQ(F("(and (P x) (forall y (Q y)))").free_vars(), (std::set<Var>{0}));
  EXPECT_TRUE(F("(forall x (exists y (R x y)))").free_vars().empty());
  Formula b = F("(ball x (S y) (P x))");
  EXPECT_EQ(b.free_vars(), (std::set<Var>{1}));
  EXPECT_EQ(b.free_vars(), free_oracle(b));
}

TEST(FreeVars, AgreesWithOracleAndLengthBound) {
  const char* corpus[] = {
      "(-> (forall x (R x y)) (exists z (and (R z x) (P u))))",
      "(forall x (forall x (P x)))",
      "(bex z (+ x y) (< z w))",
      "(or (not (= x x)) (exists x3 (R x3 x7)))",
      "(sball x (* y y) (forall y (<= x y)))",
  };
  for (const char* s : corpus) {
    Formula f = F(s);
    EXPECT_EQ(f.free_vars(), free_oracle(f)) << s;
    EXPECT_LE(f.free_vars().size(), f.length()) << s;
  }
}

TEST(Substitute, Examples) {
  Formula f = F("(and (P x) (Q y))");
  EXPECT_EQ(print(f.substitute(0, Term::zero())), "(and (P 0) (Q y))");
  Formula g = F("(forall x (P x))");
  EXPECT_EQ(g.substitute(0, read_term("z")), g);
  Formula h = F("(forall y (R x y))");
  Formula r = h.substitute(0, read_term("(S y)"));
  ASSERT_TRUE(r.is(Formula::Kind::Forall));
  EXPECT_NE(r.bound_var(), 1u);
  EXPECT_EQ(r.body().terms()[0], read_term("(S y)"));
  EXPECT_TRUE(alpha_equal(r, F("(forall w (R (S y) w))")));
}

TEST(Substitute, CaptureCaseAgreesWithEvaluator) {
  Formula h = F("(forall y (R x y))");
  Term t = read_term("(S y)");
  Formula r = h.substitute(0, t);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Toy m{3, {}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (rng() % 2) m.rel["R"].insert({a, b});
    for (int yv = 0; yv < 3; ++yv) {
      std::map<Var, int> env{{1, yv}};
      std::map<Var, int> env2{{0, (yv + 1) % 3}, {1, yv}};
      EXPECT_EQ(m.holds(r, env), m.holds(h, env2));
    }
  }
}

TEST(Substitute, UnchangedWhenNotFree) {
  const char* corpus[] = {"(forall x (P x))", "(Q y)", "(exists z (R z z))"};
  for (const char* s : corpus) {
    Formula f = F(s);
    EXPECT_EQ(f.substitute(0, read_term("(S z)")), f) << s;
  }
}

TEST(Substitute, BoundTermIsOutsideTheBinder) {
  Formula f = F("(ball y x (< y x))");
  Formula r = f.substitute(0, read_term("(S 0)"));
  EXPECT_EQ(print(r), "(ball y (S 0) (< y (S 0)))");
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(F("(= x y)")), FormulaClass::Delta0);
  EXPECT_EQ(classify(F("(bex p t (P p x))")), FormulaClass::Sigma1b);
  EXPECT_EQ(classify(F("(forall x (bex y x (R x y)))")), FormulaClass::Pi1);
  EXPECT_EQ(classify(F("(ball y x (R x y))")), FormulaClass::Pi1b);
  EXPECT_EQ(classify(F("(forall x (ball y x (R x y)))")), FormulaClass::AllPi1b);
  EXPECT_EQ(classify(F("(exists x (ball y x (R x y)))")), FormulaClass::Sigma1);
  EXPECT_EQ(classify(F("(forall x (exists y (R x y)))")), FormulaClass::Unclassified);
  EXPECT_EQ(classify(F("(sball y x (bex z y (R z y)))")), FormulaClass::Sigma1b);
  EXPECT_EQ(classify(F("(not (bex z y (R z y)))")), FormulaClass::Pi1b);
}

TEST(Classify, Delta0MembershipConsistent) {
  Formula f = F("(sbex y x (= x y))");
  for (auto c : {FormulaClass::Delta0, FormulaClass::Sigma1b, FormulaClass::Pi1b, FormulaClass::AllPi1b,
                 FormulaClass::Sigma1, FormulaClass::Pi1})
    EXPECT_TRUE(in_class(f, c)) << class_name(c);
}

TEST(Classify, StableUnderBoundRenaming) {
  const char* corpus[] = {"(forall x (bex y x (R x y)))", "(bex p t (P p x))", "(exists x (ball y x (R x y)))",
                          "(forall x (exists y (R x y)))"};
  for (const char* s : corpus) {
    Formula f = F(s);
    EXPECT_EQ(classify(f), classify(rename_bound(f, 40))) << s;
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(F("(R x y)")), 0u);
  EXPECT_EQ(rho(F("(forall x (exists y (R x y)))")), 2u);
  EXPECT_EQ(rho(F("(forall x (forall y (R x y)))")), 1u);
  EXPECT_EQ(rho(F("(exists x (exists y (R x y)))")), 1u);
  EXPECT_EQ(rho(F("(not (forall x (P x)))")), 1u);
  EXPECT_EQ(rho(F("(-> (forall x (P x)) (forall y (Q y)))")), 2u);
}

TEST(Rho, MonotoneUnderSubformulas) {
  const char* corpus[] = {"(forall x (-> (exists y (R x y)) (forall z (exists w (R z w)))))",
                          "(and (exists x (P x)) (not (forall y (exists z (R y z)))))"};
  for (const char* s : corpus) {
    Formula f = F(s);
    std::vector<Formula> subs;
    f.subformulas(subs);
    for (const auto& g : subs) EXPECT_LE(rho(g), rho(f)) << print(g);
  }
}

TEST(Parse, RoundTrip) {
  const char* corpus[] = {
      "(forall x (-> (D x) (P x)))",
      "(ball x (* (S 0) y) (or (< x y) (= x 0)))",
      "(sbex x9 (# x y) (not bot))",
      "(exists x12 (and (R x12 x) (P)))",
      "(bex z (half (len x)) (<= z z))",
  };
  for (const char* s : corpus) {
    Formula f = F(s);
    EXPECT_EQ(print(f), s);
    EXPECT_EQ(F(print(f)), f);
  }
}

TEST(Parse, SugarAndNames) {
  EXPECT_EQ(print(F("(and (P x) (Q x) (R x x))")), "(and (P x) (and (Q x) (R x x)))");
  Formula f = F("(forall foo (P foo))");
  EXPECT_EQ(f.bound_var(), 6u);
  EXPECT_EQ(print(F("(iff (P) (Q))")), "(and (-> (P) (Q)) (-> (Q) (P)))");
}

TEST(Parse, ArityErrorsCarryPositions) {
  Signature sig("s");
  sig.add("P", 1);
  try {
    read_formula("(and (P x)\n  (P x y))", &sig);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos.line, 2u);
    EXPECT_EQ(e.pos.col, 3u);
  }
  EXPECT_THROW(read_formula("(Q x)", &sig), ParseError);
  EXPECT_THROW(read_formula("(ball x x (P x))"), ParseError);
  EXPECT_THROW(read_formula("(forall (P x))"), ParseError);
  EXPECT_THROW(read_term("(S 0 0)"), ParseError);
}

TEST(Signature, IdentityAlwaysPresent) {
  Signature s("t");
  EXPECT_TRUE(s.has(Symbol::identity()));
  EXPECT_EQ(s.arity(Symbol::identity()), 2);
  EXPECT_EQ(s.index_of(Symbol::identity()), 0u);
  EXPECT_THROW(s.add("=", 3), SyntaxError);
  EXPECT_THROW(s.check(F("(P x)")), SyntaxError);
  EXPECT_THROW(s.check(F("(= (S x) x)")), SyntaxError);
}

TEST(Alpha, EqualityUpToRenaming) {
  EXPECT_TRUE(alpha_equal(F("(forall x (P x))"), F("(forall y (P y))")));
  EXPECT_FALSE(alpha_equal(F("(forall x (R x y))"), F("(forall y (R y y))")));
  EXPECT_TRUE(alpha_equal(F("(forall x (exists y (R x y)))"), F("(forall y (exists x (R y x)))")));
  EXPECT_FALSE(alpha_equal(F("(forall x (exists y (R x y)))"), F("(forall y (exists x (R x y)))")));
}
