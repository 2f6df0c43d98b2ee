// Relative translations <delta, F>: formulas, proofs, composition and the
// identity-preserving normal form.
//
// File syntax:
//   (translation NAME
//     (source (P 1) (R 2))        ; relation symbols of the source language
//     (target (D 1) (Q 1) (E 2))
//     (delta x (D x))             ; domain, one free variable
//     (rel P (x) (Q x))           ; F(P), parameters listed in argument order
//     (rel = (x y) (E x y)))
// A (rel R φ) clause without a parameter list takes the free variables of φ
// in index order. Identity maps to identity unless given.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwb/proof.hpp"
#include "iwb/sexpr.hpp"
#include "iwb/syntax.hpp"

namespace iwb {

class TranslationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RelImage {
  std::vector<Var> params;
  Formula body = Formula::bot();
};

struct Translation {
  std::string name;
  Signature source;
  Signature target;
  Var delta_var = 0;
  Formula delta = Formula::bot();
  std::map<std::string, RelImage> rel;  // keyed by source symbol name

  /// delta with its variable replaced by t.
  Formula delta_at(const Term& t) const;
  /// F(R) applied to the arguments.
  Formula image(Symbol r, const std::vector<Term>& args) const;
  /// Throws TranslationError when an invariant fails.
  void validate() const;
};

/// delta(x) := x = x, F(R) := R.
Translation identity_translation(const Signature& sig);

Formula translate_formula(const Translation& k, const Formula& phi);
/// delta(x_i) for the free variables in index order, then phi^k.
Formula translate_closure(const Translation& k, const Formula& phi);

/// j after k: translate_formula(compose(j,k), φ) ~ translate_formula(j, translate_formula(k, φ)).
Translation compose(const Translation& j, const Translation& k);

/// delta'(x) := delta(x) & forall y<x (delta(y) -> ~ y =^j x), identity to
/// identity. `order` is a binary target symbol, or "<" in an arithmetic target.
Translation normalize_identity(const Translation& j, const std::string& order = "<");

/// Bound on axiom codes and rho in translate_proof(k, p) for p restricted by n.
Code size_bound(const Code& n, const Translation& k);

Translation parse_translation(const Sexp& e);
Translation read_translation(std::string_view text);
Sexp translation_sexp(const Translation& k);

// ---------------------------------------------------------------- proofs

/// Reserved labels of the translated proof's extra assumptions.
std::string axiom_label(const Code& code);
std::string domain_label(Var v);

/// The equality facts a translated proof may rely on, as source sentences:
///   eq:nonempty  exists x x=x
///   eq:refl      forall x x=x
///   eq:R:i       forall x1..xm forall y (x_i = y -> R(..x_i..) -> R(..y..))
/// for every relation symbol R of the source (identity included).
std::vector<std::pair<std::string, Formula>> equality_obligations(const Signature& sig);

struct TranslatedProof {
  Proof proof;
  /// Open assumptions of `proof` beyond the translated assumptions of the
  /// source proof: axiom translations (label ax:CODE) and translated
  /// equality obligations (labels eq:...).
  std::vector<std::pair<std::string, Formula>> obligations;
};

/// Translates a proof whose conclusion and open assumptions are sentences.
/// Axiom leaves become open assumptions ax:CODE with the translated axiom.
TranslatedProof translate_proof(const Translation& k, const Proof& p);

}  // namespace iwb
