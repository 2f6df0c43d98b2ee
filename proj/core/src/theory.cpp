#include "iwb/theory.hpp"

#include <algorithm>
#include <stdexcept>

#include "iwb/syntax_io.hpp"

namespace iwb {

TheorySpec::TheorySpec(std::string name, Signature sig) : name_(std::move(name)), sig_(std::move(sig)) {}

void TheorySpec::add_axiom(const Formula& f) {
  sig_.check(f);
  if (!f.is_sentence()) throw SyntaxError("axiom is not a sentence: " + print(f));
  if (std::find(axioms_.begin(), axioms_.end(), f) == axioms_.end()) axioms_.push_back(f);
}

void TheorySpec::add_schema(Schema s) { schemas_.push_back(std::move(s)); }

void TheorySpec::add_restriction(std::string description, std::function<bool(const Formula&, const Code&)> keep) {
  restriction_names_.push_back(std::move(description));
  restrictions_.push_back(std::move(keep));
}

bool TheorySpec::base_recognizes(const Formula& f) const {
  if (std::find(axioms_.begin(), axioms_.end(), f) != axioms_.end()) return true;
  return std::any_of(schemas_.begin(), schemas_.end(), [&](const Schema& s) { return s.recognizes(f); });
}

bool TheorySpec::recognizes(const Formula& f) const {
  if (!base_recognizes(f)) return false;
  if (restrictions_.empty()) return true;
  Code c = code(f);
  return std::all_of(restrictions_.begin(), restrictions_.end(), [&](const auto& keep) { return keep(f, c); });
}

std::vector<Axiom> TheorySpec::listed_axioms() const {
  std::vector<Axiom> out;
  for (const auto& f : axioms_) out.push_back({code(f), f});
  std::sort(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return a.code < b.code; });
  return out;
}

std::vector<Axiom> TheorySpec::axioms_up_to(const Code& bound) const {
  std::vector<Axiom> out;
  for (auto& a : listed_axioms())
    if (a.code <= bound) out.push_back(std::move(a));
  for (const auto& s : schemas_)
    for (const auto& f : s.instances(bound)) {
      Code c = code(f);
      if (c <= bound) out.push_back({c, f});
    }
  std::sort(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return a.code < b.code; });
  out.erase(std::unique(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return a.code == b.code; }),
            out.end());
  if (!restrictions_.empty())
    std::erase_if(out, [&](const Axiom& a) {
      return !std::all_of(restrictions_.begin(), restrictions_.end(), [&](const auto& keep) { return keep(a.formula, a.code); });
    });
  return out;
}

TheorySpec base_arithmetic() {
  TheorySpec t("base-arith", Signature::arithmetic_language());
  const char* axioms[] = {
      "(forall x (not (= (S x) 0)))",
      "(forall x (forall y (-> (= (S x) (S y)) (= x y))))",
      "(forall x (= (+ x 0) x))",
      "(forall x (forall y (= (+ x (S y)) (S (+ x y)))))",
      "(forall x (= (* x 0) 0))",
      "(forall x (forall y (= (* x (S y)) (+ (* x y) x))))",
      "(forall x (not (< x 0)))",
      "(forall x (forall y (-> (< x (S y)) (or (< x y) (= x y)))))",
      "(forall x (forall y (forall z (-> (= (+ x (S z)) y) (< x y)))))",
      "(forall x (forall y (-> (<= x y) (or (< x y) (= x y)))))",
      "(forall x (forall y (-> (or (< x y) (= x y)) (<= x y))))",
  };
  for (const char* a : axioms) t.add_axiom(read_formula(a, &t.signature()));
  return t;
}

// -------------------------------------------------------------------- files

Signature parse_signature(const Sexp& e, std::string name) {
  Signature sig(std::move(name));
  if (!e.is_list()) throw ParseError(e.pos, "expected a list of (symbol arity) pairs");
  for (const auto& d : e.items) {
    if (!d.is_list() || d.size() != 2 || !d[0].is_atom || !d[1].is_atom)
      throw ParseError(d.pos, "expected (symbol arity)");
    int arity = 0;
    try {
      arity = std::stoi(d[1].atom);
    } catch (const std::exception&) {
      throw ParseError(d[1].pos, "bad arity");
    }
    try {
      sig.add(d[0].atom, arity);
    } catch (const SyntaxError& err) {
      throw ParseError(d.pos, err.what());
    }
  }
  return sig;
}

Sexp signature_sexp(const Signature& s) {
  std::vector<Sexp> xs;
  for (const auto& sym : s.symbols()) {
    if (sym == Symbol::identity()) continue;
    xs.push_back(Sexp::make_list({Sexp::make_atom(sym.name()), Sexp::make_atom(std::to_string(s.arity(sym)))}));
  }
  return Sexp::make_list(std::move(xs));
}

TheorySpec parse_theory(const Sexp& e) {
  if (e.head() != "theory" || e.size() < 2 || !e[1].is_atom) throw ParseError(e.pos, "expected (theory NAME ...)");
  std::string name = e[1].atom;
  std::optional<TheorySpec> base;
  Signature sig(name);
  bool arithmetic = false;
  std::vector<const Sexp*> axioms;
  for (std::size_t i = 2; i < e.size(); ++i) {
    const Sexp& c = e[i];
    std::string_view h = c.head();
    if (h == "signature") {
      Sexp rest = Sexp::make_list({c.items.begin() + 1, c.items.end()});
      Signature extra = parse_signature(rest, name);
      for (const auto& s : extra.symbols()) sig.add(s, extra.arity(s));
    } else if (h == "arithmetic") {
      arithmetic = true;
    } else if (h == "extends") {
      if (c.size() != 2 || !c[1].is("base-arith")) throw ParseError(c.pos, "only (extends base-arith) is built in");
      base = base_arithmetic();
    } else if (h == "axiom") {
      if (c.size() != 2) throw ParseError(c.pos, "(axiom φ) takes one formula");
      axioms.push_back(&c[1]);
    } else {
      throw ParseError(c.pos, "unknown theory clause");
    }
  }
  if (base) {
    Signature merged = base->signature();
    for (const auto& s : sig.symbols()) merged.add(s, sig.arity(s));
    TheorySpec t(name, merged);
    for (const auto& a : base->finite_axioms()) t.add_axiom(a);
    base = std::move(t);
  } else {
    sig.set_arithmetic(arithmetic);
    base = TheorySpec(name, sig);
  }
  for (const Sexp* a : axioms) {
    VarNames names;
    names.reserve(*a);
    Formula f = parse_formula(*a, names, &base->signature());
    if (!f.is_sentence()) throw ParseError(a->pos, "axiom is not a sentence");
    base->add_axiom(f);
  }
  return *base;
}

TheorySpec read_theory(std::string_view text) { return parse_theory(read_sexp(text)); }

Sexp theory_sexp(const TheorySpec& t) {
  std::vector<Sexp> xs{Sexp::make_atom("theory"), Sexp::make_atom(t.name())};
  Sexp sig = signature_sexp(t.signature());
  sig.items.insert(sig.items.begin(), Sexp::make_atom("signature"));
  xs.push_back(std::move(sig));
  if (t.signature().arithmetic()) xs.push_back(Sexp::make_list({Sexp::make_atom("arithmetic")}));
  for (const auto& a : t.finite_axioms()) xs.push_back(Sexp::make_list({Sexp::make_atom("axiom"), formula_sexp(a)}));
  return Sexp::make_list(std::move(xs));
}

}  // namespace iwb
