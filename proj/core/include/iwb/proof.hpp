// Natural-deduction proofs with explicit discharge labels.
//
// Every node stores its conclusion. Rules and their file syntax
// (conclusion first, then arguments, then premise subproofs):
//
//   (assume φ L)                 open assumption φ under label L
//   (axiom φ [code])             theory axiom, Goedel code recorded
//   (and-i φ P Q)  (and-e1 φ P)  (and-e2 φ P)
//   (or-i1 φ P)    (or-i2 φ P)   (or-e φ L1 L2 P Q R)
//   (imp-i φ L P)  (imp-e φ P Q)
//   (not-i φ L P)  (not-e bot P Q)   (bot-e φ P)   (raa φ L P)
//   (forall-i φ y P)   (forall-e φ t P)
//   (exists-i φ t P)   (exists-e φ L y P Q)
//   (refl φ)  (eq-subst φ x template P Q)
//   (unfold φ P)  (fold φ P)     bounded quantifier <-> relativized form

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwb/coding.hpp"
#include "iwb/sexpr.hpp"
#include "iwb/syntax.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

enum class Rule : std::uint8_t {
  Assume,
  Axiom,
  AndI,
  AndE1,
  AndE2,
  OrI1,
  OrI2,
  OrE,
  ImpI,
  ImpE,
  NotI,
  NotE,
  BotE,
  Raa,
  ForallI,
  ForallE,
  ExistsI,
  ExistsE,
  Refl,
  EqSubst,
  Unfold,
  Fold,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

class Proof {
public:
  Rule rule() const;
  const Formula& conclusion() const;
  const std::vector<Proof>& premises() const;
  const Proof& premise(std::size_t i) const;
  const std::string& label() const;
  const std::string& label2() const;
  Var var() const;
  const std::optional<Term>& term() const;
  const std::optional<Formula>& tmpl() const;
  const Code& code() const;

  std::size_t size() const;
  std::size_t height() const;

  // Builders. Conclusions are computed from the premises where the rule
  // determines them; nothing is checked here, use check_proof.
  static Proof assume(std::string label, Formula f);
  static Proof axiom(Formula f, Code code);
  static Proof and_i(Proof a, Proof b);
  static Proof and_e1(Proof p);
  static Proof and_e2(Proof p);
  static Proof or_i1(Proof p, Formula right);
  static Proof or_i2(Formula left, Proof p);
  static Proof or_e(Proof disj, std::string l1, Proof left, std::string l2, Proof right);
  static Proof imp_i(Formula antecedent, std::string label, Proof p);
  static Proof imp_e(Proof imp, Proof antecedent);
  static Proof not_i(Formula phi, std::string label, Proof bot);
  static Proof not_e(Proof phi, Proof neg_phi);
  static Proof bot_e(Formula target, Proof bot);
  static Proof raa(Formula phi, std::string label, Proof bot);
  static Proof forall_i(Formula conclusion, Var eigen, Proof p);
  static Proof forall_e(Proof p, Term t);
  static Proof exists_i(Formula conclusion, Term t, Proof p);
  static Proof exists_e(Proof ex, std::string label, Var eigen, Proof p);
  static Proof refl(Term t);
  static Proof eq_subst(Var x, Formula tmpl, Proof eq, Proof p);
  static Proof unfold(Proof p);
  static Proof fold(Formula bounded, Proof p);

  /// Raw node constructor used by the parser and by mutation tests.
  struct Node;
  static Proof make(Node n);
  Node node() const;

private:
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Proof::Node {
  Rule rule = Rule::Assume;
  Formula conclusion = Formula::bot();
  std::vector<Proof> premises;
  std::string label;
  std::string label2;
  Var var = 0;
  std::optional<Term> term;
  std::optional<Formula> tmpl;
  Code code;
  std::size_t size = 1;
  std::size_t height = 1;
};

inline Rule Proof::rule() const { return node_->rule; }
inline const Formula& Proof::conclusion() const { return node_->conclusion; }
inline const std::vector<Proof>& Proof::premises() const { return node_->premises; }
inline const Proof& Proof::premise(std::size_t i) const { return node_->premises.at(i); }
inline const std::string& Proof::label() const { return node_->label; }
inline const std::string& Proof::label2() const { return node_->label2; }
inline Var Proof::var() const { return node_->var; }
inline const std::optional<Term>& Proof::term() const { return node_->term; }
inline const std::optional<Formula>& Proof::tmpl() const { return node_->tmpl; }
inline const Code& Proof::code() const { return node_->code; }
inline std::size_t Proof::size() const { return node_->size; }
inline std::size_t Proof::height() const { return node_->height; }

/// The relativized form a bounded quantifier unfolds to.
Formula unfold_bounded(const Formula& f);

Sexp proof_sexp(const Proof& p);
std::string print(const Proof& p);
Proof parse_proof(const Sexp& e, VarNames& names, const Signature* sig = nullptr);
Proof read_proof(std::string_view text, const Signature* sig = nullptr);

std::string serialize(const Proof& p, const Signature& sig);
Code code_syntax(const Proof& p, const Signature& sig);

/// Every formula occurring in the proof (conclusions, discharged
/// assumptions, templates), preorder by node.
void collect_formulas(const Proof& p, std::vector<Formula>& out);

/// Applies `fn` to every node with its path ("" for the root, then ".i").
template <class Fn>
void visit_nodes(const Proof& p, Fn&& fn, const std::string& path = "") {
  fn(p, path);
  for (std::size_t i = 0; i < p.premises().size(); ++i)
    visit_nodes(p.premises()[i], fn, path.empty() ? std::to_string(i) : path + "." + std::to_string(i));
}

}  // namespace iwb
