#include "checks.hpp"

#include "iwb/certificate.hpp"
#include "iwb/checker.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb::testing {

std::optional<AxiomProof> as_axiom_proof(const NamedProof& p) {
  const Proof& q = p.proof;
  if (q.rule() != Rule::ImpI) return std::nullopt;
  Formula hyp = q.conclusion().lhs();
  AxiomProof out{TheorySpec(p.name, corpus_signature()), q.premise(0)};
  out.theory.add_axiom(hyp);
  out.proof = plug(q.premise(0), {{q.label(), Proof::axiom(hyp, out.theory.code(hyp))}});
  return out;
}

namespace {

struct Case {
  std::string name;
  TheorySpec source;
  Proof proof;
};

std::vector<Case> cases(const std::vector<NamedProof>& proofs) {
  std::vector<Case> out;
  for (const auto& p : proofs) {
    out.push_back({p.name, logic_theory(), p.proof});
    if (auto a = as_axiom_proof(p)) out.push_back({p.name + "/axiom", a->theory, a->proof});
  }
  return out;
}

std::string pair_name(const Case& c, const Translation& k) { return c.name + " via " + k.name; }

}  // namespace

Outcome check_translated_corpus(const std::vector<NamedProof>& proofs, const std::vector<Translation>& ks) {
  Outcome out;
  for (const auto& c : cases(proofs)) {
    Formula phi = check_proof(c.proof, c.source, true).conclusion;
    for (const auto& k : ks) {
      ++out.checked;
      std::string tag = pair_name(c, k);
      try {
        TranslatedProof tp = translate_proof(k, c.proof);
        CheckResult r = check_proof(tp.proof, TheorySpec("target", k.target));
        if (!alpha_equal(r.conclusion, translate_formula(k, phi))) {
          out.fail(tag + ": concludes " + print(r.conclusion));
          continue;
        }
        for (const auto& o : r.open) {
          bool listed = false;
          for (const auto& [label, f] : tp.obligations) listed = listed || (label == o.label && alpha_equal(f, o.formula));
          if (!listed) out.fail(tag + ": unlisted open assumption " + o.label);
        }
      } catch (const std::exception& e) {
        out.fail(tag + ": " + e.what());
      }
    }
  }
  return out;
}

Outcome check_mutations(const std::vector<NamedProof>& proofs) {
  Outcome out;
  TheorySpec T = logic_theory();
  for (const auto& p : proofs)
    for (const auto& m : mutate(p)) {
      ++out.checked;
      try {
        CheckResult r = check_proof(m.proof, T, true);
        out.fail(m.name + ": accepted, concludes " + print(r.conclusion));
      } catch (const ProofError&) {
      }
    }
  return out;
}

Outcome check_size_bound(const std::vector<NamedProof>& proofs, const std::vector<Translation>& ks) {
  Outcome out;
  for (const auto& c : cases(proofs)) {
    ProofStats s = proof_stats(c.proof, c.source);
    Code n = std::max(s.max_axiom_code, Code(s.max_rho));
    if (!check_restricted(c.proof, c.source, n).ok) out.fail(c.name + ": not restricted by its own measure");
    for (const auto& k : ks) {
      ++out.checked;
      TheorySpec target("target", k.target);
      TranslatedProof tp = translate_proof(k, c.proof);
      Code bound = size_bound(n, k);
      Code code = 0;
      for (const auto& [label, f] : tp.obligations) code = std::max(code, code_syntax(f, k.target));
      unsigned rho = proof_stats(tp.proof, target).max_rho;
      if (code > bound) out.fail(pair_name(c, k) + ": assumption code " + code.get_str() + " above " + bound.get_str());
      if (Code(rho) > bound) out.fail(pair_name(c, k) + ": rho " + std::to_string(rho) + " above " + bound.get_str());
    }
  }
  return out;
}

Outcome check_duality(const std::vector<Translation>& ks, const std::vector<Structure>& models,
                      const std::vector<Formula>& sentences) {
  Outcome out;
  for (const auto& k : ks) {
    std::vector<Formula> translated;
    for (const auto& phi : sentences) translated.push_back(translate_formula(k, phi));
    for (std::size_t m = 0; m < models.size(); ++m) {
      InternalModel im = internal_model(models[m], k);
      if (!im.sound()) {
        out.fail(k.name + " on model " + std::to_string(m) + ": " + im.diagnosis.front());
        continue;
      }
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        ++out.checked;
        if (eval(models[m], translated[i]) != eval(im.model, sentences[i]))
          out.fail(k.name + " on model " + std::to_string(m) + ": " + print(sentences[i]));
      }
    }
  }
  return out;
}

Outcome check_restricted_monotone(const std::vector<NamedProof>& proofs) {
  Outcome out;
  for (const auto& c : cases(proofs)) {
    ProofStats s = proof_stats(c.proof, c.source);
    Code top = std::max(s.max_axiom_code, Code(s.max_rho));
    std::vector<Code> probes;
    for (unsigned i = 0; i <= s.max_rho + 2; ++i) probes.push_back(i);
    for (Code n : std::vector<Code>{top - 1, top, top + 1, top * 2}) probes.push_back(n);
    std::sort(probes.begin(), probes.end());
    bool seen_ok = false;
    for (const Code& n : probes) {
      if (n < 0) continue;
      ++out.checked;
      bool ok = check_restricted(c.proof, c.source, n).ok;
      if (seen_ok && !ok) out.fail(c.name + ": restricted at a smaller bound but not at " + n.get_str());
      seen_ok = seen_ok || ok;
      if ((n >= top) != ok) out.fail(c.name + ": verdict at " + n.get_str() + " disagrees with the measured maxima");
    }
  }
  return out;
}

}  // namespace iwb::testing
