// Reading and printing terms and formulas as s-expressions.
//
// Grammar (formulas):
//   (R t ...)  (= s t)  (< s t)  (<= s t)  bot  top
//   (not φ)  (and φ ψ ...)  (or φ ψ ...)  (-> φ ψ)  (iff φ ψ)
//   (forall x φ)  (exists x φ)
//   (ball x t φ)  (bex x t φ)     x < t
//   (sball x t φ) (sbex x t φ)    x < |t|
// Terms: a variable, 0, (S t), (+ s t), (* s t), (# s t), (len t), (half t),
// and (num n) for the efficient numeral of a decimal n.
//
// Variables x y z u v w are indices 0..5 and xN is index N; any other
// identifier gets a fresh index above every index mentioned in the input.

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "iwb/sexpr.hpp"
#include "iwb/syntax.hpp"

namespace iwb {

class VarNames {
public:
  /// Raises the allocation floor above every explicit xN in `e`.
  void reserve(const Sexp& e);
  Var lookup(const Sexp& atom);

  static std::string name(Var v);

private:
  std::map<std::string, Var> named_;
  Var next_ = 6;
};

Term parse_term(const Sexp& e, VarNames& names);
Formula parse_formula(const Sexp& e, VarNames& names, const Signature* sig = nullptr);

/// Convenience: parse one formula from text with fresh variable names.
Formula read_formula(std::string_view text, const Signature* sig = nullptr);
Term read_term(std::string_view text);

Sexp term_sexp(const Term& t);
Sexp formula_sexp(const Formula& f);
std::string print(const Term& t);
std::string print(const Formula& f);

/// Smallest signature containing every relation symbol used in `f`.
void extend_signature(Signature& sig, const Formula& f);

}  // namespace iwb
