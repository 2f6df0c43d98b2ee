#include "iwb/interp.hpp"

#include <algorithm>

#include "iwb/coding.hpp"
#include "iwb/syntax_io.hpp"
#include "iwb/theory.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;

RelImage identity_image() { return {{0, 1}, Formula::eq(Term::var(0), Term::var(1))}; }

const RelImage* find_image(const Translation& k, const std::string& r) {
  auto it = k.rel.find(r);
  return it == k.rel.end() ? nullptr : &it->second;
}

RelImage image_of(const Translation& k, Symbol r) {
  if (const RelImage* im = find_image(k, r.name())) return *im;
  if (r == Symbol::identity()) return identity_image();
  throw TranslationError("no image for relation symbol " + r.name());
}

}  // namespace

Formula Translation::delta_at(const Term& t) const { return delta.substitute(delta_var, t); }

Formula Translation::image(Symbol r, const std::vector<Term>& args) const {
  RelImage im = image_of(*this, r);
  if (im.params.size() != args.size())
    throw TranslationError("image of " + r.name() + " takes " + std::to_string(im.params.size()) + " arguments");
  std::map<Var, Term> s;
  for (std::size_t i = 0; i < args.size(); ++i) s.emplace(im.params[i], args[i]);
  return im.body.substitute(s);
}

void Translation::validate() const {
  for (Var v : delta.free_vars())
    if (v != delta_var) throw TranslationError("domain formula has a second free variable " + VarNames::name(v));
  try {
    target.check(delta);
  } catch (const SyntaxError& e) {
    throw TranslationError(std::string("domain formula: ") + e.what());
  }
  for (const auto& sym : source.symbols()) {
    if (sym == Symbol::identity() && !find_image(*this, sym.name())) continue;
    const RelImage* im = find_image(*this, sym.name());
    if (!im) throw TranslationError("no image for relation symbol " + sym.name());
    if (static_cast<int>(im->params.size()) != source.arity(sym))
      throw TranslationError("image of " + sym.name() + " has " + std::to_string(im->params.size()) +
                             " parameters, arity is " + std::to_string(source.arity(sym)));
    std::set<Var> ps(im->params.begin(), im->params.end());
    if (ps.size() != im->params.size()) throw TranslationError("repeated parameter in image of " + sym.name());
    for (Var v : im->body.free_vars())
      if (!ps.count(v)) throw TranslationError("image of " + sym.name() + " has stray free variable " + VarNames::name(v));
    try {
      target.check(im->body);
    } catch (const SyntaxError& e) {
      throw TranslationError("image of " + sym.name() + ": " + e.what());
    }
  }
  for (const auto& [r, im] : rel)
    if (!source.has(Symbol(r))) throw TranslationError("image given for unknown symbol " + r);
}

Translation identity_translation(const Signature& sig) {
  Translation k;
  k.name = "identity";
  k.source = sig;
  k.target = sig;
  k.delta_var = 0;
  k.delta = Formula::eq(Term::var(0), Term::var(0));
  for (const auto& sym : sig.symbols()) {
    if (sym == Symbol::identity()) continue;
    RelImage im;
    std::vector<Term> args;
    for (int i = 0; i < sig.arity(sym); ++i) {
      im.params.push_back(static_cast<Var>(i));
      args.push_back(Term::var(static_cast<Var>(i)));
    }
    im.body = Formula::atom(sym, args);
    k.rel.emplace(sym.name(), std::move(im));
  }
  return k;
}

Formula translate_formula(const Translation& k, const Formula& phi) {
  switch (phi.kind()) {
    case K::Atom:
      for (const auto& t : phi.terms())
        if (!t.is_var()) throw TranslationError("translation of a function term " + print(t));
      return k.image(phi.rel(), phi.terms());
    case K::Bot: return phi;
    case K::Not: return Formula::neg(translate_formula(k, phi.lhs()));
    case K::And: return Formula::conj(translate_formula(k, phi.lhs()), translate_formula(k, phi.rhs()));
    case K::Or: return Formula::disj(translate_formula(k, phi.lhs()), translate_formula(k, phi.rhs()));
    case K::Imp: return Formula::imp(translate_formula(k, phi.lhs()), translate_formula(k, phi.rhs()));
    case K::Forall: {
      Var x = phi.bound_var();
      return Formula::forall(x, Formula::imp(k.delta_at(Term::var(x)), translate_formula(k, phi.body())));
    }
    case K::Exists: {
      Var x = phi.bound_var();
      return Formula::exists(x, Formula::conj(k.delta_at(Term::var(x)), translate_formula(k, phi.body())));
    }
    default: throw TranslationError("translation of a bounded quantifier " + print(phi));
  }
}

Formula translate_closure(const Translation& k, const Formula& phi) {
  Formula body = translate_formula(k, phi);
  std::set<Var> fv = phi.free_vars();
  if (fv.empty()) return body;
  std::vector<Formula> guards;
  for (Var v : fv) guards.push_back(k.delta_at(Term::var(v)));
  return Formula::imp(Formula::conj_all(guards), body);
}

Translation compose(const Translation& j, const Translation& k) {
  if (!(j.source == k.target)) throw TranslationError("signature mismatch: " + k.name + " does not land in the source of " + j.name);
  Translation c;
  c.name = j.name + "." + k.name;
  c.source = k.source;
  c.target = j.target;
  c.delta_var = j.delta_var;
  Term x = Term::var(c.delta_var);
  c.delta = Formula::conj(j.delta_at(x), translate_formula(j, k.delta_at(x)));
  for (const auto& sym : k.source.symbols()) {
    RelImage im = image_of(k, sym);
    c.rel.emplace(sym.name(), RelImage{im.params, translate_formula(j, im.body)});
  }
  return c;
}

Translation normalize_identity(const Translation& j, const std::string& order) {
  Translation out = j;
  out.name = j.name + "/id";
  RelImage eq = image_of(j, Symbol::identity());
  Var x = j.delta_var;
  Var y = std::max({j.delta.max_var_plus_one(), eq.body.max_var_plus_one(), x + 1,
                    *std::max_element(eq.params.begin(), eq.params.end()) + 1});
  Term tx = Term::var(x), ty = Term::var(y);
  Formula distinct = Formula::imp(j.delta_at(ty), Formula::neg(j.image(Symbol::identity(), {ty, tx})));
  Formula below = Formula::bot();
  Symbol ord(order);
  if (order == "<" && j.target.arithmetic()) {
    below = Formula::bounded(K::BoundedAll, y, tx, distinct);
  } else if (j.target.has(ord) && j.target.arity(ord) == 2) {
    below = Formula::forall(y, Formula::imp(Formula::atom(ord, {ty, tx}), distinct));
  } else {
    throw TranslationError("no binary order symbol " + order + " in target " + j.target.name());
  }
  out.delta = Formula::conj(j.delta, below);
  out.rel.erase(Symbol::identity().name());
  return out;
}

Code size_bound(const Code& n, const Translation& k) {
  const Code a = static_cast<unsigned long>(syntax_alphabet().size());
  std::size_t widest = 0;
  unsigned m = 0;
  auto measure = [&](const Formula& f) {
    widest = std::max(widest, serialize(f, k.target).size());
    Complexity c = complexity(f);
    m = std::max({m, c.sigma, c.pi});
  };
  measure(k.delta);
  for (const auto& sym : k.source.symbols()) measure(image_of(k, sym).body);
  Code e = n;
  for (const auto& [label, f] : equality_obligations(k.source)) e = std::max(e, code_syntax(f, k.source));
  const unsigned long exponent = 2 * (widest + 2);
  Code base = a * (e + 1);
  Code big;
  mpz_pow_ui(big.get_mpz_t(), base.get_mpz_t(), exponent);
  big *= a;
  Code r = n + m + 2;
  return std::max(big, Code(r * r));
}

// ------------------------------------------------------------------- files

namespace {

Signature clause_signature(const Sexp& e, const std::string& name) {
  std::vector<Sexp> decls;
  bool arith = false;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i].is("arithmetic")) arith = true;
    else decls.push_back(e[i]);
  }
  Signature s = parse_signature(Sexp::make_list(decls), name);
  s.set_arithmetic(arith);
  return s;
}

Sexp signature_clause(const char* head, const Signature& s) {
  Sexp body = signature_sexp(s);
  std::vector<Sexp> xs{Sexp::make_atom(head)};
  if (s.arithmetic()) xs.push_back(Sexp::make_atom("arithmetic"));
  for (auto& d : body.items) xs.push_back(d);
  return Sexp::make_list(xs);
}

}  // namespace

Translation parse_translation(const Sexp& e) {
  if (e.head() != "translation" || e.size() < 2 || !e[1].is_atom)
    throw ParseError(e.pos, "expected (translation NAME clauses...)");
  Translation k;
  k.name = e[1].atom;
  bool have_delta = false;
  std::vector<const Sexp*> rels;
  for (std::size_t i = 2; i < e.size(); ++i) {
    const Sexp& c = e[i];
    std::string_view h = c.head();
    if (h == "source") k.source = clause_signature(c, k.name + ".source");
    else if (h == "target") k.target = clause_signature(c, k.name + ".target");
    else if (h == "delta") {
      VarNames names;
      names.reserve(c);
      if (c.size() == 3) {
        k.delta_var = names.lookup(c[1]);
        k.delta = parse_formula(c[2], names);
      } else if (c.size() == 2) {
        k.delta = parse_formula(c[1], names);
        auto fv = k.delta.free_vars();
        if (fv.size() != 1) throw ParseError(c.pos, "domain formula needs exactly one free variable");
        k.delta_var = *fv.begin();
      } else {
        throw ParseError(c.pos, "expected (delta VAR φ)");
      }
      have_delta = true;
    } else if (h == "rel") {
      rels.push_back(&c);
    } else {
      throw ParseError(c.pos, "unknown translation clause");
    }
  }
  if (!have_delta) throw ParseError(e.pos, "translation without (delta ...)");
  for (const Sexp* c : rels) {
    if (c->size() < 3 || c->size() > 4 || !(*c)[1].is_atom) throw ParseError(c->pos, "expected (rel R (params) φ)");
    VarNames names;
    names.reserve(*c);
    RelImage im;
    if (c->size() == 4) {
      if (!(*c)[2].is_list()) throw ParseError((*c)[2].pos, "expected a parameter list");
      for (const auto& p : (*c)[2].items) im.params.push_back(names.lookup(p));
      im.body = parse_formula((*c)[3], names);
    } else {
      im.body = parse_formula((*c)[2], names);
      auto fv = im.body.free_vars();
      im.params.assign(fv.begin(), fv.end());
    }
    if (!k.rel.emplace((*c)[1].atom, std::move(im)).second) throw ParseError(c->pos, "second image for " + (*c)[1].atom);
  }
  try {
    k.validate();
  } catch (const TranslationError& err) {
    throw ParseError(e.pos, err.what());
  }
  return k;
}

Translation read_translation(std::string_view text) { return parse_translation(read_sexp(text)); }

Sexp translation_sexp(const Translation& k) {
  std::vector<Sexp> xs{Sexp::make_atom("translation"), Sexp::make_atom(k.name.empty() ? "k" : k.name),
                       signature_clause("source", k.source), signature_clause("target", k.target),
                       Sexp::make_list({Sexp::make_atom("delta"), Sexp::make_atom(VarNames::name(k.delta_var)),
                                        formula_sexp(k.delta)})};
  for (const auto& sym : k.source.symbols()) {
    const RelImage* im = find_image(k, sym.name());
    if (!im) continue;
    std::vector<Sexp> ps;
    for (Var v : im->params) ps.push_back(Sexp::make_atom(VarNames::name(v)));
    xs.push_back(Sexp::make_list({Sexp::make_atom("rel"), Sexp::make_atom(sym.name()), Sexp::make_list(ps),
                                  formula_sexp(im->body)}));
  }
  return Sexp::make_list(xs);
}

}  // namespace iwb
