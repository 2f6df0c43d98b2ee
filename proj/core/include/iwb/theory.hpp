// Theories with a decidable axiom set, enumerable by Goedel code.
//
// File syntax:
//   (theory NAME
//     (signature (P 1) (R 2) ...)     ; identity is implicit
//     (arithmetic)                     ; optional: allow function symbols
//     (extends base-arith)             ; optional
//     (axiom φ) ...)

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iwb/coding.hpp"
#include "iwb/sexpr.hpp"
#include "iwb/syntax.hpp"

namespace iwb {

struct Axiom {
  Code code;
  Formula formula;
};

/// An infinite family of axioms: a recognizer and an enumerator of the
/// instances with code <= bound. The two must agree.
struct Schema {
  std::string name;
  std::function<bool(const Formula&)> recognizes;
  std::function<std::vector<Formula>(const Code& bound)> instances;
};

class TheorySpec {
public:
  TheorySpec() = default;
  TheorySpec(std::string name, Signature sig);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const Signature& signature() const { return sig_; }

  /// Adds a sentence over the signature; duplicates are ignored.
  void add_axiom(const Formula& f);
  void add_schema(Schema s);
  /// Extra condition every axiom must meet; used by theory transformers.
  void add_restriction(std::string description, std::function<bool(const Formula&, const Code&)> keep);

  const std::vector<Formula>& finite_axioms() const { return axioms_; }
  const std::vector<Schema>& schemas() const { return schemas_; }
  const std::vector<std::string>& restrictions() const { return restriction_names_; }

  Code code(const Formula& f) const { return code_syntax(f, sig_); }
  bool recognizes(const Formula& f) const;
  /// All axioms of code <= bound, ascending by code.
  std::vector<Axiom> axioms_up_to(const Code& bound) const;
  /// Finite axioms only, ascending by code (schemas ignored).
  std::vector<Axiom> listed_axioms() const;

private:
  bool base_recognizes(const Formula& f) const;

  std::string name_;
  Signature sig_;
  std::vector<Formula> axioms_;
  std::vector<Schema> schemas_;
  std::vector<std::string> restriction_names_;
  std::vector<std::function<bool(const Formula&, const Code&)>> restrictions_;
};

/// Open defining axioms of 0, S, +, * and of < and <=:
///   ~S(x)=0, S(x)=S(y) -> x=y, x+0=x, x+S(y)=S(x+y), x*0=0, x*S(y)=x*y+x,
///   ~x<0, x<S(y) -> x<y | x=y, x+S(z)=y -> x<y,
///   x<=y -> x<y | x=y, x<y | x=y -> x<=y
/// (universally closed).
TheorySpec base_arithmetic();

TheorySpec parse_theory(const Sexp& e);
TheorySpec read_theory(std::string_view text);
/// Writes the signature and finite axioms; schemas and restrictions are code
/// and do not serialize.
Sexp theory_sexp(const TheorySpec& t);

/// Parses a bare signature clause list: ((P 1) (R 2)).
Signature parse_signature(const Sexp& e, std::string name = "");
Sexp signature_sexp(const Signature& s);

}  // namespace iwb
