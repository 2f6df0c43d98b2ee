#include <gtest/gtest.h>

#include "checks.hpp"
#include "iwb/checker.hpp"
#include "iwb/sexpr.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;
using namespace iwb::testing;

namespace {

const std::string kCorpus = std::string(IWB_TEST_DATA) + "/corpus";

std::string joined(const Outcome& o) {
  std::string s;
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) s += o.failures[i] + "\n";
  return s;
}

}  // namespace

TEST(Corpus, ShippedFilesMatchGenerator) {
  auto shipped = load_proof_corpus(kCorpus);
  auto built = build_proof_corpus();
  std::sort(built.begin(), built.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  ASSERT_EQ(shipped.size(), built.size());
  for (std::size_t i = 0; i < built.size(); ++i) {
    EXPECT_EQ(shipped[i].name, built[i].name);
    EXPECT_EQ(print(shipped[i].proof), print(built[i].proof));
  }
  auto ks = load_translation_corpus(kCorpus);
  EXPECT_EQ(ks.size(), build_translation_corpus().size());
}

TEST(Corpus, SizesMeetTheSuiteMinimum) {
  EXPECT_GE(load_proof_corpus(kCorpus).size(), 50u);
  EXPECT_GE(load_translation_corpus(kCorpus).size(), 10u);
}

TEST(Corpus, EveryProofChecksClosedWithSentenceConclusion) {
  TheorySpec T = logic_theory();
  for (const auto& p : load_proof_corpus(kCorpus)) {
    try {
      EXPECT_TRUE(check_proof(p.proof, T, true).conclusion.free_vars().empty()) << p.name;
    } catch (const std::exception& e) {
      ADD_FAILURE() << p.name << ": " << e.what();
    }
  }
}

TEST(Corpus, AxiomVariantsCiteTheirHypothesis) {
  for (const auto& p : load_proof_corpus(kCorpus)) {
    auto a = as_axiom_proof(p);
    if (!a) continue;
    CheckResult r = check_proof(a->proof, a->theory, true);
    EXPECT_TRUE(alpha_equal(r.conclusion, p.proof.conclusion().rhs())) << p.name;
    EXPECT_EQ(proof_stats(a->proof, a->theory).max_axiom_code, a->theory.code(p.proof.conclusion().lhs())) << p.name;
  }
}

TEST(Corpus, TranslatedProofsRecheck) {
  Outcome o = check_translated_corpus(load_proof_corpus(kCorpus), load_translation_corpus(kCorpus));
  EXPECT_GE(o.checked, 500u);
  EXPECT_TRUE(o.ok()) << joined(o);
}

TEST(Corpus, MutationsRejected) {
  Outcome o = check_mutations(load_proof_corpus(kCorpus));
  EXPECT_GE(o.checked, 100u);
  EXPECT_TRUE(o.ok()) << joined(o);
}

TEST(Corpus, SizeBoundHolds) {
  Outcome o = check_size_bound(load_proof_corpus(kCorpus), load_translation_corpus(kCorpus));
  EXPECT_TRUE(o.ok()) << joined(o);
}

TEST(Corpus, RestrictedProvabilityMonotone) {
  Outcome o = check_restricted_monotone(load_proof_corpus(kCorpus));
  EXPECT_TRUE(o.ok()) << joined(o);
}
