#include "iwb/syntax_io.hpp"

#include <array>
#include <cctype>

#include "iwb/coding.hpp"

namespace iwb {

namespace {

constexpr std::array<std::string_view, 6> kStdNames = {"x", "y", "z", "u", "v", "w"};

std::optional<Var> indexed_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'x') return std::nullopt;
  if (s[1] == '0' && s.size() > 2) return std::nullopt;
  Var v = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (v > 100'000'000) return std::nullopt;
    v = v * 10 + static_cast<Var>(c - '0');
  }
  return v;
}

bool identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

const std::map<std::string_view, Formula::Kind> kQuantifiers = {
    {"forall", Formula::Kind::Forall},   {"exists", Formula::Kind::Exists},
    {"ball", Formula::Kind::BoundedAll}, {"bex", Formula::Kind::BoundedEx},
    {"sball", Formula::Kind::SharpAll},  {"sbex", Formula::Kind::SharpEx},
};

bool reserved(std::string_view s) {
  return s == "not" || s == "and" || s == "or" || s == "->" || s == "iff" || s == "bot" || s == "top" ||
         kQuantifiers.count(s);
}

}  // namespace

void VarNames::reserve(const Sexp& e) {
  if (e.is_atom) {
    if (auto v = indexed_name(e.atom)) next_ = std::max(next_, *v + 1);
    return;
  }
  for (const auto& x : e.items) reserve(x);
}

Var VarNames::lookup(const Sexp& atom) {
  if (!atom.is_atom) throw ParseError(atom.pos, "expected a variable");
  const std::string& s = atom.atom;
  for (std::size_t i = 0; i < kStdNames.size(); ++i)
    if (s == kStdNames[i]) return static_cast<Var>(i);
  if (auto v = indexed_name(s)) return *v;
  if (!identifier(s) || reserved(s)) throw ParseError(atom.pos, "bad variable name '" + s + "'");
  auto [it, fresh] = named_.emplace(s, next_);
  if (fresh) ++next_;
  return it->second;
}

std::string VarNames::name(Var v) {
  if (v < kStdNames.size()) return std::string(kStdNames[v]);
  return "x" + std::to_string(v);
}

Term parse_term(const Sexp& e, VarNames& names) {
  if (e.is_atom) {
    if (e.atom == "0") return Term::zero();
    return Term::var(names.lookup(e));
  }
  if (e.size() == 0 || !e[0].is_atom) throw ParseError(e.pos, "expected a term");
  std::string_view h = e.head();
  if (h == "num") {
    if (e.size() != 2 || !e[1].is_atom) throw ParseError(e.pos, "(num n) takes one decimal literal");
    mpz_class n;
    if (n.set_str(e[1].atom, 10) != 0 || n < 0) throw ParseError(e[1].pos, "bad decimal literal");
    return numeral(n);
  }
  auto f = fn_from_name(h);
  if (!f || *f == Fn::Zero) throw ParseError(e.pos, "unknown function symbol '" + std::string(h) + "'");
  if (static_cast<int>(e.size()) - 1 != fn_arity(*f))
    throw ParseError(e.pos, "function " + std::string(h) + " expects " + std::to_string(fn_arity(*f)) + " arguments");
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.size(); ++i) args.push_back(parse_term(e[i], names));
  return Term::apply(*f, std::move(args));
}

Formula parse_formula(const Sexp& e, VarNames& names, const Signature* sig) {
  if (e.is_atom) {
    if (e.atom == "bot") return Formula::bot();
    if (e.atom == "top") return Formula::neg(Formula::bot());
    throw ParseError(e.pos, "expected a formula, got '" + e.atom + "'");
  }
  if (e.size() == 0 || !e[0].is_atom) throw ParseError(e.pos, "expected a formula");
  std::string_view h = e.head();
  auto want = [&](std::size_t n) {
    if (e.size() != n + 1)
      throw ParseError(e.pos, "'" + std::string(h) + "' expects " + std::to_string(n) + " arguments");
  };
  if (h == "not") {
    want(1);
    return Formula::neg(parse_formula(e[1], names, sig));
  }
  if (h == "and" || h == "or") {
    if (e.size() < 3) throw ParseError(e.pos, "'" + std::string(h) + "' expects at least 2 arguments");
    std::vector<Formula> fs;
    for (std::size_t i = 1; i < e.size(); ++i) fs.push_back(parse_formula(e[i], names, sig));
    return h == "and" ? Formula::conj_all(fs) : Formula::disj_all(fs);
  }
  if (h == "->" || h == "iff") {
    want(2);
    Formula a = parse_formula(e[1], names, sig);
    Formula b = parse_formula(e[2], names, sig);
    return h == "->" ? Formula::imp(a, b) : Formula::iff(a, b);
  }
  if (auto q = kQuantifiers.find(h); q != kQuantifiers.end()) {
    bool bounded = q->second != Formula::Kind::Forall && q->second != Formula::Kind::Exists;
    want(bounded ? 3 : 2);
    Var x = names.lookup(e[1]);
    if (!bounded) {
      Formula body = parse_formula(e[2], names, sig);
      return q->second == Formula::Kind::Forall ? Formula::forall(x, body) : Formula::exists(x, body);
    }
    if (sig && !sig->arithmetic()) throw ParseError(e.pos, "bounded quantifier outside arithmetic signature");
    Term t = parse_term(e[2], names);
    if (t.mentions(x)) throw ParseError(e[2].pos, "bound term mentions the bound variable");
    return Formula::bounded(q->second, x, t, parse_formula(e[3], names, sig));
  }
  if (reserved(h)) throw ParseError(e.pos, "malformed '" + std::string(h) + "'");
  Symbol rel{h};
  if (sig) {
    if (!sig->has(rel)) throw ParseError(e.pos, "unknown relation symbol '" + std::string(h) + "'");
    if (static_cast<std::size_t>(sig->arity(rel)) != e.size() - 1)
      throw ParseError(e.pos, "relation " + std::string(h) + " has arity " + std::to_string(sig->arity(rel)) + ", got " +
                                  std::to_string(e.size() - 1) + " arguments");
  } else if (rel == Symbol::identity() && e.size() != 3) {
    throw ParseError(e.pos, "identity is binary");
  }
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.size(); ++i) {
    Term t = parse_term(e[i], names);
    if (!t.is_var() && sig && !sig->arithmetic()) throw ParseError(e[i].pos, "function symbol outside arithmetic signature");
    args.push_back(std::move(t));
  }
  return Formula::atom(rel, std::move(args));
}

Formula read_formula(std::string_view text, const Signature* sig) {
  Sexp e = read_sexp(text);
  VarNames names;
  names.reserve(e);
  return parse_formula(e, names, sig);
}

Term read_term(std::string_view text) {
  Sexp e = read_sexp(text);
  VarNames names;
  names.reserve(e);
  return parse_term(e, names);
}

Sexp term_sexp(const Term& t) {
  if (t.is_var()) return Sexp::make_atom(VarNames::name(t.var_index()));
  if (t.fn() == Fn::Zero) return Sexp::make_atom("0");
  std::vector<Sexp> xs{Sexp::make_atom(std::string(fn_name(t.fn())))};
  for (const auto& a : t.args()) xs.push_back(term_sexp(a));
  return Sexp::make_list(std::move(xs));
}

Sexp formula_sexp(const Formula& f) {
  using K = Formula::Kind;
  auto list = [](std::string_view h, std::vector<Sexp> rest) {
    rest.insert(rest.begin(), Sexp::make_atom(std::string(h)));
    return Sexp::make_list(std::move(rest));
  };
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Sexp> xs;
      for (const auto& t : f.terms()) xs.push_back(term_sexp(t));
      return list(f.rel().name(), std::move(xs));
    }
    case K::Bot: return Sexp::make_atom("bot");
    case K::Not: return list("not", {formula_sexp(f.lhs())});
    case K::And: return list("and", {formula_sexp(f.lhs()), formula_sexp(f.rhs())});
    case K::Or: return list("or", {formula_sexp(f.lhs()), formula_sexp(f.rhs())});
    case K::Imp: return list("->", {formula_sexp(f.lhs()), formula_sexp(f.rhs())});
    default: break;
  }
  for (const auto& [name, kind] : kQuantifiers) {
    if (kind != f.kind()) continue;
    Sexp x = Sexp::make_atom(VarNames::name(f.bound_var()));
    if (f.is_bounded_quantifier()) return list(name, {x, term_sexp(f.bound()), formula_sexp(f.body())});
    return list(name, {x, formula_sexp(f.body())});
  }
  throw SyntaxError("unprintable formula");
}

std::string print(const Term& t) { return write_sexp(term_sexp(t)); }
std::string print(const Formula& f) { return write_sexp(formula_sexp(f)); }

void extend_signature(Signature& sig, const Formula& f) {
  std::vector<Formula> subs;
  f.subformulas(subs);
  for (const auto& g : subs) {
    if (g.is(Formula::Kind::Atom)) sig.add(g.rel(), static_cast<int>(g.terms().size()));
    if (g.has_functions() && !sig.arithmetic() && (g.is(Formula::Kind::Atom) || g.is_bounded_quantifier()))
      sig.set_arithmetic(true);
  }
}

}  // namespace iwb
