// First-order syntax: symbols, terms, formulas and signatures.
//
// Terms and formulas are immutable values backed by shared nodes. Variables
// are canonical indices; names only exist in the s-expression reader/printer.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iwb {

using Var = std::uint32_t;

/// Interned relation symbol. Cheap to copy and compare.
class Symbol {
public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.name() <=> b.name(); }

  static Symbol identity();

private:
  std::uint32_t id_ = 0;
};

class SyntaxError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Function symbols of the arithmetic signature.
enum class Fn : std::uint8_t { Zero, Succ, Add, Mul, Smash, Len, Half };

int fn_arity(Fn f);
std::string_view fn_name(Fn f);
std::optional<Fn> fn_from_name(std::string_view name);

class Term {
public:
  enum class Kind : std::uint8_t { Variable, Apply };

  static Term var(Var v);
  static Term apply(Fn f, std::vector<Term> args);
  static Term zero() { return apply(Fn::Zero, {}); }
  static Term succ(Term t) { return apply(Fn::Succ, {std::move(t)}); }
  static Term add(Term a, Term b) { return apply(Fn::Add, {std::move(a), std::move(b)}); }
  static Term mul(Term a, Term b) { return apply(Fn::Mul, {std::move(a), std::move(b)}); }
  static Term smash(Term a, Term b) { return apply(Fn::Smash, {std::move(a), std::move(b)}); }

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Variable; }
  Var var_index() const;
  Fn fn() const;
  const std::vector<Term>& args() const;

  /// Number of symbols in prefix notation.
  std::size_t length() const;
  bool closed() const;
  void collect_vars(std::set<Var>& out) const;
  bool mentions(Var v) const;
  Var max_var_plus_one() const;

  Term substitute(Var x, const Term& t) const;

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
public:
  enum class Kind : std::uint8_t {
    Atom,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Forall,
    Exists,
    BoundedAll,   // forall x < t
    BoundedEx,    // exists x < t
    SharpAll,     // forall x < |t|
    SharpEx,      // exists x < |t|
  };

  static Formula atom(Symbol rel, std::vector<Term> args);
  static Formula atom(std::string_view rel, std::vector<Term> args) { return atom(Symbol(rel), std::move(args)); }
  static Formula eq(Term a, Term b);
  static Formula bot();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(Var x, Formula body);
  static Formula exists(Var x, Formula body);
  static Formula bounded(Kind k, Var x, Term bound, Formula body);

  /// Right-nested conjunction; the empty conjunction is `~bot`.
  static Formula conj_all(const std::vector<Formula>& fs);
  static Formula disj_all(const std::vector<Formula>& fs);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_quantifier() const;
  bool is_bounded_quantifier() const;

  Symbol rel() const;
  const std::vector<Term>& terms() const;
  const Formula& lhs() const;  // first child of a connective, body of negation
  const Formula& rhs() const;
  const Formula& body() const;
  Var bound_var() const;
  const Term& bound() const;

  std::size_t length() const;
  std::set<Var> free_vars() const;
  bool is_free(Var v) const;
  bool is_sentence() const { return free_vars().empty(); }
  Var max_var_plus_one() const;
  bool has_functions() const;
  std::size_t depth() const;

  /// Capture-avoiding substitution of `t` for the free occurrences of `x`.
  Formula substitute(Var x, const Term& t) const;
  /// Simultaneous substitution.
  Formula substitute(const std::map<Var, Term>& s) const;

  /// Every proper subformula (bodies and children), preorder.
  void subformulas(std::vector<Formula>& out) const;

  friend bool operator==(const Formula& a, const Formula& b);
  const void* identity() const { return node_.get(); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Equality up to renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

/// Renames every bound variable to a fresh index >= `first_fresh`.
Formula rename_bound(const Formula& f, Var first_fresh);

class Signature {
public:
  Signature();
  explicit Signature(std::string name, bool arithmetic = false);

  void add(Symbol rel, int arity);
  void add(std::string_view rel, int arity) { add(Symbol(rel), arity); }
  bool has(Symbol rel) const { return arities_.count(rel.name()) != 0; }
  int arity(Symbol rel) const;
  const std::string& name() const { return name_; }
  bool arithmetic() const { return arithmetic_; }
  void set_arithmetic(bool a) { arithmetic_ = a; }

  /// Relation symbols ordered by index; identity first.
  const std::vector<Symbol>& symbols() const { return order_; }
  std::size_t index_of(Symbol rel) const;

  /// Throws SyntaxError when `f` uses an unknown symbol, a wrong arity, or
  /// function symbols/bounded quantifiers outside an arithmetic signature.
  void check(const Formula& f) const;
  void check(const Term& t) const;

  /// The arithmetic signature: identity, <, <=.
  static Signature arithmetic_language();
  /// Relational arithmetic used as a source for numberizing translations:
  /// identity, Z/1, Sc/2, Add/3, Mul/3, Le/2.
  static Signature relational_arithmetic();

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.arithmetic_ == b.arithmetic_ && a.order_ == b.order_ && a.arities_ == b.arities_;
  }

private:
  std::string name_;
  bool arithmetic_ = false;
  std::vector<Symbol> order_;
  std::map<std::string, int> arities_;
};

// Formula classification in the bounded-arithmetic and arithmetical
// hierarchies, least class first.
enum class FormulaClass : std::uint8_t { Delta0, Sigma1b, Pi1b, AllPi1b, Sigma1, Pi1, Unclassified };

std::string_view class_name(FormulaClass c);
FormulaClass classify(const Formula& f);
/// Membership (not just least class): Delta0 formulas are members of every class.
bool in_class(const Formula& f, FormulaClass c);

/// Quantifier-alternation complexity: min of the sigma and pi levels below.
unsigned rho(const Formula& f);

struct Complexity {
  unsigned sigma;
  unsigned pi;
};
Complexity complexity(const Formula& f);

std::set<Var> free_vars(const Formula& f);
inline Formula substitute(const Formula& f, Var x, const Term& t) { return f.substitute(x, t); }

}  // namespace iwb
