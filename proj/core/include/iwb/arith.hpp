// Evaluation-trace proofs of true closed bounded sentences from the open
// defining axioms of base arithmetic.
//
// Supported: =, <, <= over terms built from 0, S, +, *; all connectives;
// bounded quantifiers x < t; unbounded existentials (by witness search) and
// negated unbounded universals (by counterexample search). Closed terms are
// evaluated to unary numerals S^n(0) and the recursion equations of + and *
// are unwound step by step.

#pragma once

#include <map>
#include <stdexcept>

#include "iwb/proof.hpp"
#include "iwb/theory.hpp"

namespace iwb {

class OutsideFragment : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FalseSentence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ArithOptions {
  std::size_t witness_limit = 64;   // search range for unbounded quantifiers
  std::size_t max_value = 4096;     // largest intermediate value traced
};

/// Truth in the standard model; throws OutsideFragment for unbounded
/// quantifiers and unsupported function symbols.
bool holds_in_N(const Formula& f, const std::map<Var, Code>& env = {}, const ArithOptions& opt = {});

/// A `base`-proof of the closed sentence `phi`. `base` must contain the
/// axioms of base_arithmetic(). Throws FalseSentence (naming the failing
/// subformula) or OutsideFragment.
Proof prove_true_bounded(const Formula& phi, const TheorySpec& base, const ArithOptions& opt = {});

/// A `base`-proof of t = S^n(0) for a closed term t of value n.
Proof prove_evaluation(const Term& t, const TheorySpec& base, const ArithOptions& opt = {});

}  // namespace iwb
