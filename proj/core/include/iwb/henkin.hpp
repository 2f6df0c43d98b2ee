// Desk-scale Henkin completion: witness constants, completion of a theory
// against a finite-model consistency oracle, the term model, and an
// interpretation certificate read off a finite model.
//
// Witness constants are unary relation symbols c1, c2, ... with axioms
//   ∃x c(x),  ∀x∀y (c(x) → (c(y) → x = y)),  ∃vφ → ∃v (c(v) ∧ φ)
// one per existential sentence ∃vφ of the sentence universe.
//
// The sentence universe for a bound b is every sentence over the base
// signature with code <= b whose k-th nested binder is variable k (so one
// representative per renaming of bound variables), ascending by code.
//
// Completion decides the universe in code order, then tries to name every
// element by a constant, then decides identities between constants and the
// atomic facts about them. The oracle is finite model search: a sentence φ
// is accepted when a model of size <= max_domain of the accepted set plus φ
// is known or found; otherwise ¬φ is accepted, which the current model
// witnesses. A search that hits its step budget truncates the state.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "iwb/certificate.hpp"
#include "iwb/model.hpp"
#include "iwb/theory.hpp"

namespace iwb {

class HenkinError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Witness {
  Formula sentence = Formula::bot();  // ∃vφ over the base signature
  Code code = 0;                      // its code in the base signature
  std::string constant;
};

struct WitnessExtension {
  TheorySpec theory;  // base axioms plus the witness axioms
  std::vector<Witness> witnesses;
};

/// Largest code of a string of length <= n over the syntax alphabet.
Code code_bound_for_length(std::size_t n);

/// The sentence universe of `sig` up to code b.
std::vector<Formula> sentence_universe(const Signature& sig, const Code& b);

/// One witness constant per existential sentence of the universe.
WitnessExtension add_witnesses(const TheorySpec& V, const Code& b);

struct OracleEntry {
  std::string query;     // printed sentence
  Code code = 0;         // code in the extended signature
  std::string answer;    // "accepted", "negated" or "undecided"
  std::string by;        // "current model", "search", "search budget", "witness axiom", "expansion"
  std::size_t size = 0;  // domain size of the witnessing model
};

struct HenkinState {
  TheorySpec base;
  TheorySpec extended;
  Code bound = 0;
  std::vector<Witness> witnesses;
  std::vector<Formula> W;  // accepted sentences over the extended signature, in decision order
  std::vector<OracleEntry> transcript;
  SearchOptions oracle;
  bool named = false;      // every element named by a constant
  bool truncated = false;
  std::string reason;      // why the state is truncated
};

/// Throws HenkinError when the oracle finds no model of V.
HenkinState henkin_complete(const TheorySpec& V, const Code& b, const SearchOptions& oracle = {});

struct TermModel {
  Structure model;                               // over the extended signature
  std::vector<std::vector<std::string>> names;   // constants naming each element
  std::vector<std::string> failures;             // sentences of W false in the model
  bool partial = false;                          // built from a truncated state
  bool ok() const { return failures.empty() && !partial; }
};

/// Constants modulo the identities in W, relations read off W's atomic
/// decisions; every sentence of W is then evaluated. Throws HenkinError
/// when there are no constants.
TermModel term_model(const HenkinState& s);

/// U_N says there are exactly the elements e0, e1, ...: closure, existence,
/// distinctness and uniqueness axioms over unary symbols E0, E1, .... The
/// translation maps each symbol of V to the disjunction over its table, and
/// each axiom of V gets a U_N-proof following its evaluation in N. Throws
/// HenkinError when an axiom of V is false in N.
InterpretationCertificate interpretation_from_model(const Structure& N, const TheorySpec& V);

struct HenkinRun {
  HenkinState state;
  std::optional<TermModel> model;
  std::optional<InterpretationCertificate> certificate;
  std::optional<CertificateReport> report;
};

/// complete → term model → certificate → verify at notion sa.
HenkinRun henkin_pipeline(const TheorySpec& V, const Code& b, const SearchOptions& oracle = {});

nlohmann::json henkin_state_json(const HenkinState& s);
HenkinState henkin_state_from_json(const nlohmann::json& j);

}  // namespace iwb
