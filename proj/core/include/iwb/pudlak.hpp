// Pudlák's construction: given a translation j of relational arithmetic into
// an arithmetical host, a formula H(x,y) mapping an initial part of the host
// numbers onto the j-numbers, and the cut J on which that map is an
// isomorphism for bounded formulas.
//
// Source side. j translates Signature::relational_arithmetic() (=, Z, Sc,
// Add, Mul, Le). Arithmetic source formulas with function symbols and
// bounded quantifiers are first rewritten relationally: every compound term
// becomes an existentially quantified value whose graph is stated first.
//
// Host side. Sequences come from a sequence kit, two relation symbols of the
// host: Lh(s, n) "s has length n" and At(s, i, a) "entry i of s is a".
// Nothing else about sequences is assumed. Goodsequence(σ, x, y) is the
// conjunction of the named clauses
//   length          Lh(σ, S x)
//   anchor-0        σ_0 =j 0j
//   anchor-y        σ_x =j y
//   domain          every entry i <= x satisfies δ
//   successor       σ_{i+1} =j σ_i +j 1j for i < x
//   addition        σ_k +j σ_l =j σ_{k+l} for k + l <= x
//   multiplication  σ_k ·j σ_l =j σ_{k·l} for k · l <= x
//   initial-segment every δ-element a <=j y is =j some σ_i, i <= x
//   confinement     I^j(σ_i) for i < x   (relative variant only)
// and
//   H(x,y)  := ∃σ Goodsequence(σ,x,y) ∧ ∀σ'∀y' (Goodsequence(σ',x,y') → y =j y')
//   J′(x)   := ∀x' < S x ∃y H(x',y)
//   J       := close_cut(J′)
// Free variables: x is variable 0, y is 1, σ is 2.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iwb/interp.hpp"
#include "iwb/model.hpp"

namespace iwb {

class PudlakError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SequenceKit {
  std::string length = "Lh";  // Lh(s, n)
  std::string entry = "At";   // At(s, i, a)
};

/// `host` with the kit symbols added; the arithmetic flag is kept.
Signature with_sequence_kit(Signature host, const SequenceKit& kit = {});

/// Relational form of an arithmetic formula, over relational_arithmetic().
/// Bounded quantifiers become guarded unbounded ones; x < t becomes
/// Le(x,t) ∧ ¬ x = t. Throws PudlakError on len, half or #.
Formula relationalize(const Formula& phi);

/// j applied to the relational form of an arithmetic formula.
Formula source_image(const Translation& j, const Formula& phi);

using Clause = std::pair<std::string, Formula>;

struct PudlakArtifacts {
  Translation j;
  SequenceKit kit;
  Signature host;                     // j.target with the kit
  std::vector<Clause> clauses;        // conjuncts of Goodsequence, in order
  Formula goodsequence = Formula::bot();
  Formula H = Formula::bot();
  Formula Jprime = Formula::bot();
  Formula J = Formula::bot();
  std::optional<Formula> confined_to;  // I, an arithmetic source formula in x

  /// =j of two host terms.
  Formula same(const Term& a, const Term& b) const;
};

PudlakArtifacts build_pudlak(const Translation& j, const SequenceKit& kit = {});
/// Adds the confinement clause for I, a one-variable arithmetic formula
/// over the source whose j-image is asserted of the entries.
PudlakArtifacts build_pudlak_relative(const Translation& j, const Formula& I, const SequenceKit& kit = {});
/// Goodsequence, H, J′ and J from the given clauses (used for mutations).
PudlakArtifacts assemble_pudlak(PudlakArtifacts p, std::vector<Clause> clauses);

// ------------------------------------------------------------ finite models

/// A model of size n with the standard arithmetic of the host on 0..n-1 and
/// the kit tables: element e codes codes[e]; elements past the list code
/// nothing.
Structure sequence_model(const Signature& host, std::size_t n, const std::vector<std::vector<Elem>>& codes,
                         const SequenceKit& kit = {});

/// Codes for a model of size n: element s codes (h(0), ..., h(s-1)) when
/// those values are below n, and otherwise a distractor, a short prefix of h
/// with its last entry moved.
std::vector<std::vector<Elem>> canonical_codes(std::size_t n, const std::function<std::size_t(std::size_t)>& h);

struct PudlakTable {
  std::vector<std::vector<std::pair<Elem, Elem>>> good;  // per x: (σ, y) with Goodsequence
  std::vector<std::vector<Elem>> images;                 // per x: y with H(x, y)
  std::size_t jprime = 0;                                // J′ holds exactly below this
  std::set<Elem> J;                                      // extension of J

  std::optional<Elem> h(Elem x) const;
};

/// H and J′ computed clause by clause over every (σ, x, y); J from the
/// closure formula applied to J′'s extension unless `with_cut` is false
/// (its cost grows like size^5).
PudlakTable compute_h(const Structure& M, const PudlakArtifacts& P, bool with_cut = true);

/// Clauses failed by every candidate (σ, y) at x.
std::vector<std::string> failed_everywhere(const Structure& M, const PudlakArtifacts& P, Elem x);

struct AgreementReport {
  std::size_t formulas = 0;
  std::size_t checked = 0;   // (formula, assignment) pairs compared
  std::size_t skipped = 0;   // some term value left J′
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string text() const;
};

/// Δ0 formulas in x, y up to the given depth. Atoms are t = v and t < v for
/// t among the variables in scope, 0, S v, v+w and v·w and v a variable in
/// scope; a level adds ¬, the connectives ∧ ∨ → with x = y or x < y, and
/// ∀v < b and ∃v < b over the previous level with a fresh v (z, then u)
/// that the body mentions, b a variable in scope.
std::vector<Formula> delta0_formulas(unsigned depth);

/// Terms over x, y, 0, S, +, · with at most `max_size` symbols.
std::vector<Term> small_terms(std::size_t max_size);

/// Truth in the naturals; nullopt when some term value exceeds `limit`.
std::optional<bool> eval_natural(const Formula& phi, const std::map<Var, std::uint64_t>& a, std::uint64_t limit);

/// For each Δ0 formula up to `depth` and each assignment of its variables in
/// J′: truth of the j-image at the H-images equals truth in the naturals.
/// Also reports a failing J′(0), naming the clauses no candidate meets, and
/// any x with two images that are not =j.
AgreementReport check_delta0_agreement(const Structure& M, const PudlakArtifacts& P, unsigned depth,
                                       const PudlakTable* table = nullptr);

/// t^j(h(x̄)) =j h(y) iff t(x̄) = y, for the small terms and x̄, y in J′.
AgreementReport check_term_law(const Structure& M, const PudlakArtifacts& P, std::size_t max_size,
                               const PudlakTable* table = nullptr);

/// Relative variant: h(x) satisfies I^j whenever x + 1 is in J′.
AgreementReport check_confinement(const Structure& M, const PudlakArtifacts& P, const PudlakTable* table = nullptr);

}  // namespace iwb
