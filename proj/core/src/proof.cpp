#include "iwb/proof.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace iwb {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  char tag;
};

constexpr std::array<RuleInfo, 22> kRules = {{
    {Rule::Assume, "assume", 'b'},     {Rule::Axiom, "axiom", 'c'},       {Rule::AndI, "and-i", 'd'},
    {Rule::AndE1, "and-e1", 'f'},      {Rule::AndE2, "and-e2", 'g'},      {Rule::OrI1, "or-i1", 'h'},
    {Rule::OrI2, "or-i2", 'i'},        {Rule::OrE, "or-e", 'j'},          {Rule::ImpI, "imp-i", 'k'},
    {Rule::ImpE, "imp-e", 'm'},        {Rule::NotI, "not-i", 'n'},        {Rule::NotE, "not-e", 'o'},
    {Rule::BotE, "bot-e", 'p'},        {Rule::Raa, "raa", 'q'},           {Rule::ForallI, "forall-i", 'r'},
    {Rule::ForallE, "forall-e", 'u'},  {Rule::ExistsI, "exists-i", 'w'},  {Rule::ExistsE, "exists-e", 'x'},
    {Rule::Refl, "refl", 'y'},         {Rule::EqSubst, "eq-subst", 'z'},  {Rule::Unfold, "unfold", 'B'},
    {Rule::Fold, "fold", 'C'},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

Proof build(Proof::Node n) { return Proof::make(std::move(n)); }

const Formula& expect(const Formula& f, Formula::Kind k, std::string_view what) {
  if (!f.is(k)) throw std::invalid_argument(std::string(what) + ": premise has the wrong shape: " + print(f));
  return f;
}

}  // namespace

std::string_view rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& r : kRules)
    if (r.name == name) return r.rule;
  return std::nullopt;
}

Proof Proof::make(Node n) {
  n.size = 1;
  n.height = 1;
  for (const auto& p : n.premises) {
    n.size += p.size();
    n.height = std::max(n.height, p.height() + 1);
  }
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof::Node Proof::node() const { return *node_; }

Proof Proof::assume(std::string label, Formula f) {
  Node n;
  n.rule = Rule::Assume;
  n.conclusion = std::move(f);
  n.label = std::move(label);
  return build(std::move(n));
}

Proof Proof::axiom(Formula f, Code code) {
  Node n;
  n.rule = Rule::Axiom;
  n.conclusion = std::move(f);
  n.code = std::move(code);
  return build(std::move(n));
}

Proof Proof::and_i(Proof a, Proof b) {
  Node n;
  n.rule = Rule::AndI;
  n.conclusion = Formula::conj(a.conclusion(), b.conclusion());
  n.premises = {std::move(a), std::move(b)};
  return build(std::move(n));
}

Proof Proof::and_e1(Proof p) {
  Node n;
  n.rule = Rule::AndE1;
  n.conclusion = expect(p.conclusion(), Formula::Kind::And, "and-e1").lhs();
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::and_e2(Proof p) {
  Node n;
  n.rule = Rule::AndE2;
  n.conclusion = expect(p.conclusion(), Formula::Kind::And, "and-e2").rhs();
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::or_i1(Proof p, Formula right) {
  Node n;
  n.rule = Rule::OrI1;
  n.conclusion = Formula::disj(p.conclusion(), std::move(right));
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::or_i2(Formula left, Proof p) {
  Node n;
  n.rule = Rule::OrI2;
  n.conclusion = Formula::disj(std::move(left), p.conclusion());
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::or_e(Proof disj, std::string l1, Proof left, std::string l2, Proof right) {
  Node n;
  n.rule = Rule::OrE;
  n.conclusion = left.conclusion();
  n.label = std::move(l1);
  n.label2 = std::move(l2);
  n.premises = {std::move(disj), std::move(left), std::move(right)};
  return build(std::move(n));
}

Proof Proof::imp_i(Formula antecedent, std::string label, Proof p) {
  Node n;
  n.rule = Rule::ImpI;
  n.conclusion = Formula::imp(std::move(antecedent), p.conclusion());
  n.label = std::move(label);
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::imp_e(Proof imp, Proof antecedent) {
  Node n;
  n.rule = Rule::ImpE;
  n.conclusion = expect(imp.conclusion(), Formula::Kind::Imp, "imp-e").rhs();
  n.premises = {std::move(imp), std::move(antecedent)};
  return build(std::move(n));
}

Proof Proof::not_i(Formula phi, std::string label, Proof bot) {
  Node n;
  n.rule = Rule::NotI;
  n.conclusion = Formula::neg(std::move(phi));
  n.label = std::move(label);
  n.premises = {std::move(bot)};
  return build(std::move(n));
}

Proof Proof::not_e(Proof phi, Proof neg_phi) {
  Node n;
  n.rule = Rule::NotE;
  n.conclusion = Formula::bot();
  n.premises = {std::move(phi), std::move(neg_phi)};
  return build(std::move(n));
}

Proof Proof::bot_e(Formula target, Proof bot) {
  Node n;
  n.rule = Rule::BotE;
  n.conclusion = std::move(target);
  n.premises = {std::move(bot)};
  return build(std::move(n));
}

Proof Proof::raa(Formula phi, std::string label, Proof bot) {
  Node n;
  n.rule = Rule::Raa;
  n.conclusion = std::move(phi);
  n.label = std::move(label);
  n.premises = {std::move(bot)};
  return build(std::move(n));
}

Proof Proof::forall_i(Formula conclusion, Var eigen, Proof p) {
  Node n;
  n.rule = Rule::ForallI;
  n.conclusion = std::move(conclusion);
  n.var = eigen;
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::forall_e(Proof p, Term t) {
  const Formula& all = expect(p.conclusion(), Formula::Kind::Forall, "forall-e");
  Node n;
  n.rule = Rule::ForallE;
  n.conclusion = all.body().substitute(all.bound_var(), t);
  n.term = std::move(t);
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::exists_i(Formula conclusion, Term t, Proof p) {
  Node n;
  n.rule = Rule::ExistsI;
  n.conclusion = std::move(conclusion);
  n.term = std::move(t);
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::exists_e(Proof ex, std::string label, Var eigen, Proof p) {
  Node n;
  n.rule = Rule::ExistsE;
  n.conclusion = p.conclusion();
  n.label = std::move(label);
  n.var = eigen;
  n.premises = {std::move(ex), std::move(p)};
  return build(std::move(n));
}

Proof Proof::refl(Term t) {
  Node n;
  n.rule = Rule::Refl;
  n.conclusion = Formula::eq(t, t);
  return build(std::move(n));
}

Proof Proof::eq_subst(Var x, Formula tmpl, Proof eq, Proof p) {
  const Formula& e = eq.conclusion();
  if (!e.is(Formula::Kind::Atom) || !(e.rel() == Symbol::identity()))
    throw std::invalid_argument("eq-subst: first premise is not an equation: " + print(e));
  Node n;
  n.rule = Rule::EqSubst;
  n.conclusion = tmpl.substitute(x, e.terms()[1]);
  n.var = x;
  n.tmpl = std::move(tmpl);
  n.premises = {std::move(eq), std::move(p)};
  return build(std::move(n));
}

Proof Proof::unfold(Proof p) {
  Node n;
  n.rule = Rule::Unfold;
  n.conclusion = unfold_bounded(p.conclusion());
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Proof Proof::fold(Formula bounded, Proof p) {
  Node n;
  n.rule = Rule::Fold;
  n.conclusion = std::move(bounded);
  n.premises = {std::move(p)};
  return build(std::move(n));
}

Formula unfold_bounded(const Formula& f) {
  using K = Formula::Kind;
  if (!f.is_bounded_quantifier()) throw std::invalid_argument("not a bounded quantifier: " + print(f));
  Term bound = f.bound();
  if (f.is(K::SharpAll) || f.is(K::SharpEx)) bound = Term::apply(Fn::Len, {bound});
  Formula guard = Formula::atom("<", {Term::var(f.bound_var()), bound});
  if (f.is(K::BoundedAll) || f.is(K::SharpAll)) return Formula::forall(f.bound_var(), Formula::imp(guard, f.body()));
  return Formula::exists(f.bound_var(), Formula::conj(guard, f.body()));
}

// ------------------------------------------------------------------ s-exprs

Sexp proof_sexp(const Proof& p) {
  std::vector<Sexp> xs{Sexp::make_atom(std::string(rule_name(p.rule()))), formula_sexp(p.conclusion())};
  auto lab = [](const std::string& l) { return Sexp::make_atom(l); };
  auto var = [](Var v) { return Sexp::make_atom(VarNames::name(v)); };
  switch (p.rule()) {
    case Rule::Assume: xs.push_back(lab(p.label())); break;
    case Rule::Axiom: xs.push_back(Sexp::make_atom(p.code().get_str())); break;
    case Rule::OrE:
      xs.push_back(lab(p.label()));
      xs.push_back(lab(p.label2()));
      break;
    case Rule::ImpI:
    case Rule::NotI:
    case Rule::Raa: xs.push_back(lab(p.label())); break;
    case Rule::ForallI: xs.push_back(var(p.var())); break;
    case Rule::ForallE:
    case Rule::ExistsI: xs.push_back(term_sexp(*p.term())); break;
    case Rule::ExistsE:
      xs.push_back(lab(p.label()));
      xs.push_back(var(p.var()));
      break;
    case Rule::EqSubst:
      xs.push_back(var(p.var()));
      xs.push_back(formula_sexp(*p.tmpl()));
      break;
    default: break;
  }
  for (const auto& q : p.premises()) xs.push_back(proof_sexp(q));
  return Sexp::make_list(std::move(xs));
}

std::string print(const Proof& p) { return write_sexp_pretty(proof_sexp(p)); }

Proof parse_proof(const Sexp& e, VarNames& names, const Signature* sig) {
  if (!e.is_list() || e.size() < 2 || !e[0].is_atom) throw ParseError(e.pos, "expected (rule conclusion ...)");
  auto rule = rule_from_name(e[0].atom);
  if (!rule) throw ParseError(e[0].pos, "unknown rule '" + e[0].atom + "'");
  Proof::Node n;
  n.rule = *rule;
  n.conclusion = parse_formula(e[1], names, sig);
  std::size_t i = 2;
  auto label = [&]() -> std::string {
    if (i >= e.size() || !e[i].is_atom) throw ParseError(e.pos, "missing discharge label");
    return e[i++].atom;
  };
  auto var = [&]() -> Var {
    if (i >= e.size()) throw ParseError(e.pos, "missing variable");
    return names.lookup(e[i++]);
  };
  auto term = [&]() -> Term {
    if (i >= e.size()) throw ParseError(e.pos, "missing term");
    return parse_term(e[i++], names);
  };
  std::size_t premises = 0;
  switch (n.rule) {
    case Rule::Assume: n.label = label(); break;
    case Rule::Axiom:
      if (i < e.size() && e[i].is_atom) {
        if (n.code.set_str(e[i].atom, 10) != 0) throw ParseError(e[i].pos, "bad axiom code");
        ++i;
      } else {
        n.code = -1;  // filled in by the checker's signature
      }
      break;
    case Rule::AndI: premises = 2; break;
    case Rule::AndE1:
    case Rule::AndE2:
    case Rule::OrI1:
    case Rule::OrI2:
    case Rule::BotE:
    case Rule::Unfold:
    case Rule::Fold: premises = 1; break;
    case Rule::OrE:
      n.label = label();
      n.label2 = label();
      premises = 3;
      break;
    case Rule::ImpI:
    case Rule::NotI:
    case Rule::Raa:
      n.label = label();
      premises = 1;
      break;
    case Rule::ImpE:
    case Rule::NotE: premises = 2; break;
    case Rule::ForallI:
      n.var = var();
      premises = 1;
      break;
    case Rule::ForallE:
    case Rule::ExistsI:
      n.term = term();
      premises = 1;
      break;
    case Rule::ExistsE:
      n.label = label();
      n.var = var();
      premises = 2;
      break;
    case Rule::Refl: break;
    case Rule::EqSubst:
      n.var = var();
      if (i >= e.size()) throw ParseError(e.pos, "missing template");
      n.tmpl = parse_formula(e[i++], names, sig);
      premises = 2;
      break;
  }
  if (e.size() - i != premises)
    throw ParseError(e.pos, std::string(rule_name(n.rule)) + " expects " + std::to_string(premises) + " premises, got " +
                                std::to_string(e.size() - i));
  for (; i < e.size(); ++i) n.premises.push_back(parse_proof(e[i], names, sig));
  return Proof::make(std::move(n));
}

Proof read_proof(std::string_view text, const Signature* sig) {
  Sexp e = read_sexp(text);
  VarNames names;
  names.reserve(e);
  return parse_proof(e, names, sig);
}

// ------------------------------------------------------------------- coding

namespace {

void ser_proof(const Proof& p, const Signature& sig, std::map<std::string, std::size_t>& labels, std::string& out) {
  auto lab = [&](const std::string& l) {
    auto [it, fresh] = labels.emplace(l, labels.size());
    out += 'l';
    out += dyadic(it->second);
  };
  out += info(p.rule()).tag;
  out += serialize(p.conclusion(), sig);
  if (!p.label().empty()) lab(p.label());
  if (!p.label2().empty()) lab(p.label2());
  if (p.rule() == Rule::ForallI || p.rule() == Rule::ExistsE || p.rule() == Rule::EqSubst) {
    out += 'v';
    out += dyadic(p.var());
  }
  if (p.term()) out += serialize(*p.term());
  if (p.tmpl()) out += serialize(*p.tmpl(), sig);
  for (const auto& q : p.premises()) ser_proof(q, sig, labels, out);
}

}  // namespace

std::string serialize(const Proof& p, const Signature& sig) {
  std::map<std::string, std::size_t> labels;
  std::string out;
  ser_proof(p, sig, labels, out);
  return out;
}

Code code_syntax(const Proof& p, const Signature& sig) { return code_of_serialized(serialize(p, sig)); }

void collect_formulas(const Proof& p, std::vector<Formula>& out) {
  visit_nodes(p, [&](const Proof& q, const std::string&) {
    out.push_back(q.conclusion());
    if (q.tmpl()) out.push_back(*q.tmpl());
  });
}

}  // namespace iwb
