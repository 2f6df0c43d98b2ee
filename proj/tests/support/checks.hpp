// Corpus-wide property checks shared by the unit tests and the acceptance
// runner. Each returns the number of cases examined and every failure.
#pragma once

#include <string>
#include <vector>

#include "corpus.hpp"

namespace iwb::testing {

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

/// A corpus proof (imp_i (hyp) h body) recast as a proof of its consequent
/// from hyp as the single axiom of a theory; nullopt for other shapes.
struct AxiomProof {
  TheorySpec theory;
  Proof proof;
};
std::optional<AxiomProof> as_axiom_proof(const NamedProof& p);

/// Every translated corpus proof re-checks, its open assumptions are the
/// listed obligations, and it concludes the translated sentence.
Outcome check_translated_corpus(const std::vector<NamedProof>& proofs, const std::vector<Translation>& ks);

/// Every mutation of every corpus proof is rejected. `checked` counts mutations.
Outcome check_mutations(const std::vector<NamedProof>& proofs);

/// Axiom codes and rho of translated proofs stay under size_bound(n, k).
Outcome check_size_bound(const std::vector<NamedProof>& proofs, const std::vector<Translation>& ks);

/// eval(M, φ^j) == eval(M^j, φ) over the given structures and sentences.
Outcome check_duality(const std::vector<Translation>& ks, const std::vector<Structure>& models,
                      const std::vector<Formula>& sentences);

/// check_restricted is monotone in n for every corpus proof.
Outcome check_restricted_monotone(const std::vector<NamedProof>& proofs);

}  // namespace iwb::testing
