#include <gtest/gtest.h>

#include <filesystem>

#include "corpus.hpp"
#include "iwb/certificate.hpp"
#include "iwb/checker.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;

namespace {

Signature source_sig() {
  Signature s("v");
  s.add("P", 1);
  s.add("Q", 1);
  return s;
}

Signature target_sig() {
  Signature s("u");
  s.add("D", 1);
  s.add("A", 1);
  s.add("B", 1);
  return s;
}

Formula FV(std::string_view s) {
  Signature g = source_sig();
  return read_formula(s, &g);
}
Formula FU(std::string_view s) {
  Signature g = target_sig();
  return read_formula(s, &g);
}

const Term z = Term::var(2);

struct Fixture {
  InterpretationCertificate c;
  Proof u1 = Proof::refl(z), u2 = u1, u3 = u1;

  Fixture() {
    c.k = read_translation(
        "(translation dab (source (P 1) (Q 1)) (target (D 1) (A 1) (B 1)) (delta x (D x)) (rel P (x) (A x)) (rel Q (x) (B x)))");
    c.V = TheorySpec("v", source_sig());
    for (auto s : {"(forall x (P x))", "(forall x (-> (P x) (Q x)))", "(exists x (P x))"}) c.V.add_axiom(FV(s));
    c.U = TheorySpec("u", target_sig());
    for (auto s : {"(forall x (-> (D x) (A x)))", "(forall x (-> (A x) (B x)))", "(exists x (D x))"}) c.U.add_axiom(FU(s));
    auto ax = [&](const char* s) { return Proof::axiom(FU(s), c.U.code(FU(s))); };
    u1 = ax("(forall x (-> (D x) (A x)))");
    u2 = ax("(forall x (-> (A x) (B x)))");
    u3 = ax("(exists x (D x))");
    Proof dz = Proof::assume("d", FU("(D z)"));

    c.axioms.emplace(c.V.code(FV("(forall x (P x))")), u1);
    Proof step = Proof::imp_i(FU("(A z)"), "a", kit_mp(Proof::forall_e(u2, z), Proof::assume("a", FU("(A z)"))));
    c.axioms.emplace(c.V.code(FV("(forall x (-> (P x) (Q x)))")),
                     Proof::forall_i(FU("(forall x (-> (D x) (-> (A x) (B x))))"), 2, Proof::imp_i(FU("(D z)"), "d", step)));
    Proof both = Proof::and_i(dz, kit_mp(Proof::forall_e(u1, z), dz));
    c.axioms.emplace(c.V.code(FV("(exists x (P x))")),
                     Proof::exists_e(u3, "d", 2, Proof::exists_i(FU("(exists x (and (D x) (A x)))"), z, both)));
    c.equality.emplace("eq:nonempty", Proof::exists_e(u3, "d", 2,
                                                      Proof::exists_i(FU("(exists x (and (D x) (= x x)))"), z,
                                                                      Proof::and_i(dz, Proof::refl(z)))));
    c.x = c.V.listed_axioms().back().code;
  }

  static Proof kit_mp(Proof a, Proof b) { return Proof::imp_e(std::move(a), std::move(b)); }

  Proof v_axiom(const char* s) const { return Proof::axiom(FV(s), c.V.code(FV(s))); }

  // forall x Q x from the first two axioms.
  Proof all_q() const {
    Proof step = kit_mp(Proof::forall_e(v_axiom("(forall x (-> (P x) (Q x)))"), z), Proof::forall_e(v_axiom("(forall x (P x))"), z));
    return Proof::forall_i(FV("(forall x (Q x))"), 2, step);
  }

  // exists x P x through an instance at a free variable.
  Proof some_p() const {
    Term x = Term::var(0);
    return Proof::exists_i(FV("(exists x (P x))"), x, Proof::forall_e(v_axiom("(forall x (P x))"), x));
  }
};

}  // namespace

TEST(Certificate, AxiomNotionsAccept) {
  Fixture f;
  CertificateReport a = verify_certificate(f.c, Notion::A);
  EXPECT_TRUE(a.ok) << a.text();
  EXPECT_EQ(a.witnesses, 3u);
  EXPECT_EQ(a.x, f.c.x);
  CertificateReport sa = verify_certificate(f.c, Notion::SA);
  ASSERT_TRUE(sa.ok);
  Code y = 0;
  for (const auto& [code, w] : f.c.axioms) y = std::max(y, code_syntax(w, f.c.U.signature()));
  EXPECT_EQ(sa.y, y);
  EXPECT_NE(sa.text().find("largest witness code " + y.get_str()), std::string::npos);
}

TEST(Certificate, MissingOrWrongWitnessRejected) {
  Fixture f;
  Code last = f.c.x;
  f.c.axioms.erase(last);
  CertificateReport r = verify_certificate(f.c, Notion::SA);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_axiom, last);

  Fixture g;
  auto first = g.c.axioms.begin();
  std::swap(first->second, std::next(first)->second);
  EXPECT_FALSE(verify_certificate(g.c, Notion::A).ok);

  Fixture h;
  h.c.equality.insert_or_assign("eq:nonempty", h.u3);
  CertificateReport e = verify_certificate(h.c, Notion::A);
  EXPECT_FALSE(e.ok);
  ASSERT_FALSE(e.failures.empty());
  EXPECT_EQ(e.failures[0].rfind("eq:nonempty", 0), 0u);
}

TEST(Certificate, CoverageBoundLimitsTheCheck) {
  Fixture f;
  Code last = f.c.x;
  f.c.axioms.erase(last);
  f.c.x = last - 1;
  CertificateReport r = verify_certificate(f.c, Notion::A);
  EXPECT_TRUE(r.ok) << r.text();
  EXPECT_EQ(r.witnesses, 2u);
}

TEST(Certificate, TheoremWitnessesCheckInTarget) {
  Fixture f;
  for (const Proof& p : {f.all_q(), f.some_p()}) {
    Formula phi = check_proof(p, f.c.V, true).conclusion;
    Proof w = theorem_witness(f.c, p);
    CheckResult r = check_proof(w, f.c.U, true);
    EXPECT_TRUE(alpha_equal(r.conclusion, translate_closure(f.c.k, phi))) << print(r.conclusion);
    f.c.theorems.push_back({p, w});
  }
  CertificateReport st = verify_certificate(f.c, Notion::ST);
  EXPECT_TRUE(st.ok) << st.text();
  EXPECT_EQ(st.witnesses, 2u);
  f.c.theorems.push_back({f.all_q(), f.c.theorems[1].witness});
  EXPECT_FALSE(verify_certificate(f.c, Notion::T).ok);
}

TEST(Certificate, FreeVariableStepNeedsNonemptyWitness) {
  Fixture f;
  f.c.equality.clear();
  EXPECT_THROW(theorem_witness(f.c, f.some_p()), std::runtime_error);
  EXPECT_NO_THROW(theorem_witness(f.c, f.all_q()));
}

TEST(Certificate, LogicalEqualityWitnesses) {
  Fixture f;
  for (const auto& [label, phi] : equality_obligations(f.c.V.signature())) {
    auto w = logical_equality_witness(f.c.k, label);
    if (label == "eq:nonempty") {
      EXPECT_FALSE(w);
      continue;
    }
    ASSERT_TRUE(w) << label;
    CheckResult r = check_proof(*w, f.c.U, true);
    EXPECT_TRUE(alpha_equal(r.conclusion, translate_formula(f.c.k, phi))) << label;
  }
  Translation odd = f.c.k;
  odd.rel["="] = RelImage{{0, 1}, FU("(iff (A x) (A y))")};
  EXPECT_FALSE(logical_equality_witness(odd, "eq:refl"));
}

TEST(Certificate, PlugRespectsDischarge) {
  Formula a = FU("(A z)");
  Proof open = Proof::assume("h", a);
  Proof closed = Proof::imp_i(a, "h", Proof::assume("h", a));
  Proof repl = Proof::assume("other", a);
  EXPECT_EQ(plug(open, {{"h", repl}}).label(), "other");
  Proof kept = plug(closed, {{"h", repl}});
  EXPECT_EQ(kept.premise(0).label(), "h");
}

TEST(Certificate, DiskRoundTrip) {
  Fixture f;
  f.c.theorems.push_back({f.all_q(), theorem_witness(f.c, f.all_q())});
  auto dir = std::filesystem::temp_directory_path() / "iwb_cert_roundtrip";
  std::filesystem::remove_all(dir);
  write_certificate(dir.string(), f.c);
  EXPECT_TRUE(std::filesystem::exists(dir / "equality" / "eq_nonempty.proof"));
  InterpretationCertificate back = read_certificate(dir.string());
  EXPECT_EQ(back.x, f.c.x);
  EXPECT_EQ(back.axioms.size(), 3u);
  EXPECT_TRUE(verify_certificate(back, Notion::SA).ok);
  EXPECT_TRUE(verify_certificate(back, Notion::ST).ok);
  std::filesystem::remove_all(dir);
}

TEST(Certificate, NotionNames) {
  for (Notion n : {Notion::A, Notion::SA, Notion::T, Notion::ST}) EXPECT_EQ(notion_from_name(notion_name(n)), n);
  EXPECT_THROW(notion_from_name("b"), std::invalid_argument);
}
