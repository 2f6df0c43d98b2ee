// Definable cuts in an arithmetical theory: the four cut obligations,
// closure of a formula to a cut, short membership proofs for numerals and
// term-closure proofs.
//
// Obligations for J(x), in this order:
//   progressive  J(0) & forall x (J(x) -> J(S x))
//   downward     forall x forall y (J(x) & y <= x -> J(y))
//   plus-times   forall x forall y (J(x) & J(y) -> J(x+y) & J(x*y))
//   omega1       forall x (J(x) -> J(x # x))
// x # x is omega1(x).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "iwb/proof.hpp"
#include "iwb/theory.hpp"

namespace iwb {

class CutError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class CutClause : std::uint8_t { Progressive, Downward, PlusTimes, Omega1 };
std::string_view cut_clause_name(CutClause c);

/// The four obligations; J must have exactly one free variable.
std::vector<Formula> cut_obligations(const Formula& J);

/// J instantiated at t.
Formula cut_at(const Formula& J, const Term& t);

struct CutSpec {
  Formula J = Formula::bot();
  TheorySpec U;
  std::array<std::optional<Proof>, 4> obligations;

  /// Throws CutError unless every supplied proof checks closed in U and
  /// concludes its obligation.
  void validate() const;
};

/// The cut J(x) := x = x over U, with all four obligation proofs.
CutSpec trivial_cut(const TheorySpec& U);

/// Shortening of J0 to a formula closed under +, * and omega1:
///   I1(x) := forall y < S x  J0(y)
///   I2(x) := I1(x) & forall y (I1(y) -> I1(y + x))
///   I3(x) := I2(x) & forall y (I2(y) -> I2(y * x))
///   J(x)  := I3(x) & forall y (I3(y) -> I3(y # x))
Formula close_cut(const Formula& J0);

/// U-proof of J(numeral(n)) following the dyadic recursion of numeral(n);
/// needs the progressive and plus-times obligation proofs.
Proof prove_cut_membership(const CutSpec& c, const Code& n);

/// U-proof of forall x1..xk (J(x1) & ... & J(xk) -> J(t)), variables of t in
/// index order. Supports 0, S, +, * and x # x with equal arguments.
Proof prove_term_closure(const CutSpec& c, const Term& t);

}  // namespace iwb
