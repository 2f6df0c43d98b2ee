#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;
using namespace iwb::testing;

namespace {

Signature sig() { return corpus_signature(); }
Formula F(std::string_view s) {
  Signature g = sig();
  return read_formula(s, &g);
}

Structure make(std::size_t size, std::map<std::string, std::set<Tuple>> tables) {
  Structure M;
  M.sig = sig();
  M.size = size;
  M.tables = std::move(tables);
  return M;
}

// Symbols without a clause map to themselves.
Translation T(std::string clauses) {
  for (const char* d : {"(rel P (x) (P x))", "(rel Q (x) (Q x))", "(rel D (x) (D x))", "(rel R (x y) (R x y))"})
    if (clauses.find(std::string(d).substr(0, 7)) == std::string::npos) clauses += std::string(" ") + d;
  return read_translation("(translation t (source (P 1) (Q 1) (D 1) (R 2)) (target (P 1) (Q 1) (D 1) (R 2)) " + clauses +
                          ")");
}

std::vector<Formula> sentences(std::uint64_t seed, std::size_t n, int depth) {
  std::mt19937_64 rng(seed);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_sentence(rng, sig(), depth));
  return out;
}

}  // namespace

TEST(Eval, AgreesWithOracleOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Structure M = random_structure(rng, sig(), 1 + i % 4);
    Formula phi = random_sentence(rng, sig(), 3);
    ASSERT_EQ(eval(M, phi), oracle_eval(M, phi)) << print(phi);
  }
}

TEST(Eval, OrderOnTwoElements) {
  Structure M = make(2, {{"R", {{0, 1}}}});
  EXPECT_TRUE(eval(M, F("(exists x (forall y (-> (not (= x y)) (R x y))))")));
  EXPECT_FALSE(eval(M, F("(exists x (R x x))")));
  EXPECT_TRUE(eval(M, F("(forall x (forall y (-> (R x y) (not (R y x)))))")));
  EXPECT_TRUE(eval(M, F("(R x y)"), {{0, 0}, {1, 1}}));
}

TEST(Eval, Errors) {
  Structure M = make(2, {});
  EXPECT_THROW(eval(M, F("(P x)")), ModelError);
  EXPECT_THROW(eval(M, read_formula("(S x)")), ModelError);
}

TEST(Eval, ArithmeticIsPartialAboveTheNumbers) {
  Structure M;
  M.sig = Signature::arithmetic_language();
  M.size = 4;
  Formula succ = read_formula("(= (S x) y)", &M.sig);
  EXPECT_TRUE(eval(M, succ, {{0, 2}, {1, 3}}));
  EXPECT_FALSE(eval(M, succ, {{0, 3}, {1, 0}}));
  EXPECT_FALSE(eval(M, read_formula("(not (= (S x) (S x)))", &M.sig), {{0, 1}}));
  EXPECT_TRUE(eval(M, read_formula("(< x y)", &M.sig), {{0, 1}, {1, 2}}));
  EXPECT_EQ(eval_term(M, read_term("(+ x x)"), {{0, 2}}), std::nullopt);
  EXPECT_EQ(eval_term(M, read_term("(* x x)"), {{0, 1}}), Elem{1});
}

TEST(InternalModel, RelativizationCutsTheDomain) {
  Structure M = make(3, {{"D", {{0}, {2}}}, {"P", {{2}}}, {"R", {{0, 2}, {1, 1}}}});
  InternalModel im = internal_model(M, T("(delta x (D x))"));
  ASSERT_TRUE(im.sound());
  EXPECT_EQ(im.model.size, 2u);
  EXPECT_TRUE(im.model.holds("P", {1}));
  EXPECT_TRUE(im.model.holds("R", {0, 1}));
  EXPECT_FALSE(im.model.holds("R", {1, 1}));
}

TEST(InternalModel, QuotientByInterpretedEquality) {
  Structure M = make(4, {{"P", {{0}, {3}}}});
  InternalModel im = internal_model(M, T("(delta x (= x x)) (rel = (x y) (iff (P x) (P y))) (rel Q (x) (P x))"));
  ASSERT_TRUE(im.sound());
  EXPECT_EQ(im.model.size, 2u);
  EXPECT_EQ(im.classes[0], (std::vector<Elem>{0, 3}));
}

TEST(InternalModel, Diagnoses) {
  Structure M = make(3, {{"R", {{0, 1}}}, {"P", {{0}}}});
  auto bad_eq = internal_model(M, T("(delta x (= x x)) (rel = (x y) (R x y))"));
  EXPECT_FALSE(bad_eq.sound());
  EXPECT_NE(std::find(bad_eq.diagnosis.begin(), bad_eq.diagnosis.end(), "=^j is not reflexive on the domain"),
            bad_eq.diagnosis.end());
  auto bad_rel = internal_model(M, T("(delta x (= x x)) (rel = (x y) (= x x))"));
  // Everything collapses to one class, on which P and R are ambiguous.
  ASSERT_EQ(bad_rel.diagnosis.size(), 2u);
  EXPECT_EQ(bad_rel.diagnosis[0], "image of P depends on the choice of representatives");
  EXPECT_EQ(bad_rel.diagnosis[1], "image of R depends on the choice of representatives");
}

TEST(Duality, SmallDomainsAgainstCorpusTranslations) {
  auto ks = load_translation_corpus(std::string(IWB_TEST_DATA) + "/corpus");
  std::vector<Structure> models = all_structures(sig(), 1);
  std::mt19937_64 rng(11);
  for (std::size_t size = 2; size <= 4; ++size)
    for (int i = 0; i < 6; ++i) models.push_back(random_structure(rng, sig(), size));
  Outcome o = check_duality(ks, models, sentences(3, 60, 3));
  EXPECT_TRUE(o.ok()) << (o.ok() ? "" : o.failures.front());
  EXPECT_GT(o.checked, 10000u);
}

TEST(Isomorphism, InvarianceAndDetection) {
  std::mt19937_64 rng(5);
  auto phis = sentences(9, 40, 3);
  for (int round = 0; round < 20; ++round) {
    Structure A = random_structure(rng, sig(), 4);
    std::vector<Elem> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    Structure B = A;
    B.tables.clear();
    for (const auto& [r, rows] : A.tables) {
      B.tables[r];
      for (const auto& row : rows) {
        Tuple t;
        for (Elem e : row) t.push_back(perm[e]);
        B.set(r, t);
      }
    }
    ASSERT_TRUE(isomorphism(A, B).has_value());
    for (const auto& phi : phis) ASSERT_EQ(eval(A, phi), eval(B, phi));
  }
  Structure A = make(2, {{"P", {{0}}}}), B = make(2, {{"P", {{0}, {1}}}});
  EXPECT_FALSE(isomorphism(A, B).has_value());
}

TEST(FindModel, Examples) {
  Signature s = sig();
  auto empty = find_model(std::vector<Formula>{}, s);
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->size, 1u);

  std::vector<Formula> two{F("(exists x (exists y (not (= x y))))"), F("(forall x (-> (P x) (not (Q x))))"),
                           F("(exists x (and (P x) (R x x)))"), F("(exists x (Q x))")};
  auto m = find_model(two, s);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size, 2u);
  for (const auto& f : two) EXPECT_TRUE(oracle_eval(*m, f)) << print(f);

  EXPECT_FALSE(find_model({F("(forall x (P x))"), F("(exists x (not (P x)))")}, s));

  // Irreflexive, transitive and serial: only infinite models.
  SearchStats st;
  auto inf = find_model({F("(forall x (not (R x x)))"), F("(forall x (forall y (forall z (-> (and (R x y) (R y z)) (R x z)))))"),
                         F("(forall x (exists y (R x y)))")},
                        s, {}, &st);
  EXPECT_FALSE(inf);
  EXPECT_FALSE(st.budget_hit);
}

TEST(Structure, JsonRoundTrip) {
  Structure M = make(3, {{"P", {{1}}}, {"R", {{0, 2}, {2, 2}}}, {"Q", {}}, {"D", {}}});
  Structure N = structure_from_json(structure_json(M));
  EXPECT_EQ(N.size, 3u);
  EXPECT_EQ(N.tables, M.tables);
  EXPECT_THROW(structure_from_json(nlohmann::json::parse(R"({"size":2,"relations":{"P":[[5]]}})")), ModelError);
}

TEST(TranslationSemantics, IdentityAndComposition) {
  auto ks = load_translation_corpus(std::string(IWB_TEST_DATA) + "/corpus");
  std::mt19937_64 rng(21);
  auto phis = sentences(4, 25, 2);
  Translation id = identity_translation(sig());
  for (int round = 0; round < 30; ++round) {
    Structure M = random_structure(rng, sig(), 1 + round % 4);
    const Translation& a = ks[round % ks.size()];
    const Translation& b = ks[(round * 5 + 1) % ks.size()];
    const Translation& c = ks[(round * 7 + 3) % ks.size()];
    Translation left = compose(compose(a, b), c), right = compose(a, compose(b, c));
    for (const auto& phi : phis) {
      ASSERT_EQ(eval(M, translate_formula(id, phi)), eval(M, phi));
      bool nested = eval(M, translate_formula(a, translate_formula(b, phi)));
      ASSERT_EQ(eval(M, translate_formula(compose(a, b), phi)), nested) << a.name << " " << b.name;
      ASSERT_EQ(eval(M, translate_formula(left, phi)), eval(M, translate_formula(right, phi)));
    }
  }
}

TEST(TranslationSemantics, NormalizedIdentityGivesIsomorphicModel) {
  Translation j = T("(delta x (= x x)) (rel = (x y) (iff (P x) (P y))) (rel Q (x) (not (P x))) (rel D (x) (P x)) "
                    "(rel R (x y) (and (P x) (not (P y))))");
  Translation n = normalize_identity(j, "R");
  EXPECT_EQ(n.rel.count("="), 0u);
  std::mt19937_64 rng(8);
  for (int round = 0; round < 20; ++round) {
    std::size_t size = 2 + round % 4;
    Structure M = random_structure(rng, sig(), size);
    M.tables["R"].clear();
    for (Elem a = 0; a < size; ++a)
      for (Elem b = a + 1; b < size; ++b) M.set("R", {a, b});
    // R is now a strict linear order, so each class has a least element.
    InternalModel a = internal_model(M, j), b = internal_model(M, n);
    ASSERT_TRUE(a.sound() && b.sound());
    EXPECT_TRUE(isomorphism(a.model, b.model).has_value());
    for (const auto& cls : b.classes) EXPECT_EQ(cls.size(), 1u);
  }
  EXPECT_THROW(normalize_identity(j, "E"), TranslationError);
}
