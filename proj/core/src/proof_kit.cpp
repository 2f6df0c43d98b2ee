#include "iwb/proof_kit.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwb::kit {

Var fresh_var(std::initializer_list<Formula> fs, std::initializer_list<Term> ts) {
  Var v = 0;
  for (const auto& f : fs) v = std::max(v, f.max_var_plus_one());
  for (const auto& t : ts) v = std::max(v, t.max_var_plus_one());
  return v;
}

namespace {

const Formula& equation(const Proof& p) {
  const Formula& f = p.conclusion();
  if (!f.is(Formula::Kind::Atom) || !(f.rel() == Symbol::identity()))
    throw std::invalid_argument("expected a proof of an equation, got " + print(f));
  return f;
}

}  // namespace

Proof symm(const Proof& eq) {
  const Formula& e = equation(eq);
  const Term& s = e.terms()[0];
  Var x = fresh_var({e});
  return Proof::eq_subst(x, Formula::eq(Term::var(x), s), eq, Proof::refl(s));
}

Proof trans(const Proof& rs, const Proof& st) {
  const Formula& a = equation(rs);
  const Formula& b = equation(st);
  if (!(a.terms()[1] == b.terms()[0]))
    throw std::invalid_argument("trans: middle terms differ: " + print(a) + " / " + print(b));
  const Term& r = a.terms()[0];
  Var x = fresh_var({a, b});
  return Proof::eq_subst(x, Formula::eq(r, Term::var(x)), st, rs);
}

Proof congruence(const Proof& eq, const Term& ctx, Var hole) {
  const Formula& e = equation(eq);
  Term lhs = ctx.substitute(hole, e.terms()[0]);
  return Proof::eq_subst(hole, Formula::eq(lhs, ctx), eq, Proof::refl(lhs));
}

Proof rewrite(const Proof& eq, const Formula& tmpl, Var hole, const Proof& p) {
  equation(eq);
  return Proof::eq_subst(hole, tmpl, eq, p);
}

Proof inst(Proof p, const std::vector<Term>& ts) {
  for (const auto& t : ts) p = Proof::forall_e(std::move(p), t);
  return p;
}

}  // namespace iwb::kit
