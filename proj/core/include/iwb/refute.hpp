// Bounded search for proofs of falsity, and the theory transform that keeps
// an axiom only while no refutation of small code has been found.

#pragma once

#include <optional>
#include <string>

#include "iwb/proof.hpp"
#include "iwb/theory.hpp"

namespace iwb {

struct RefuteBudget {
  std::size_t max_nodes = 64;     // weight limit of a derived fact
  std::size_t max_facts = 4000;   // facts settled before giving up
  std::size_t max_witnesses = 8;  // eigenvariables introduced by exists-e
};

struct RefuteResult {
  std::optional<Proof> proof;  // concludes bot, no open assumptions
  std::size_t facts = 0;       // settled facts
  std::size_t candidates = 0;  // facts generated
  bool saturated = false;      // queue ran dry inside the budget
  bool found() const { return proof.has_value(); }
};

/// Forward search from the axioms of U with code <= n and rho <= n, in
/// increasing order of proof weight; ties broken by the printed formula.
/// Rules: and-e, imp-e, not-e, disjunctive syllogism, forall-e over the
/// current term set, exists-e through fresh witnesses, unfolding of bounded
/// quantifiers. Not finding a refutation says nothing about consistency.
RefuteResult search_refutation(const TheorySpec& U, const Code& n, const RefuteBudget& budget = {});

/// V' with axioms { v in V : search_refutation(V, code(v)) finds nothing }.
/// The budget is written into the name of V'.
TheorySpec feferman_restrict(const TheorySpec& V, const RefuteBudget& budget = {});

std::string budget_tag(const RefuteBudget& b);

}  // namespace iwb
