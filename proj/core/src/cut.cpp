#include "iwb/cut.hpp"

#include <algorithm>
#include <functional>

#include "iwb/checker.hpp"
#include "iwb/coding.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;

Var cut_var(const Formula& J) {
  auto fv = J.free_vars();
  if (fv.size() != 1) throw CutError("a cut formula needs exactly one free variable, " + print(J) + " has " + std::to_string(fv.size()));
  return *fv.begin();
}

Term V(Var v) { return Term::var(v); }

Proof intro_all(const Formula& all, Var eigen, const std::function<Proof(const Formula&)>& body) {
  return Proof::forall_i(all, eigen, body(all.body().substitute(all.bound_var(), V(eigen))));
}

Proof intro_imp(const Formula& imp, const std::string& label, const std::function<Proof(const Proof&)>& body) {
  return Proof::imp_i(imp.lhs(), label, body(Proof::assume(label, imp.lhs())));
}

const Proof& need(const CutSpec& c, CutClause k) {
  const auto& p = c.obligations[static_cast<std::size_t>(k)];
  if (!p) throw CutError("cut " + print(c.J) + " lacks the " + std::string(cut_clause_name(k)) + " obligation proof");
  return *p;
}

}  // namespace

std::string_view cut_clause_name(CutClause c) {
  switch (c) {
    case CutClause::Progressive: return "progressive";
    case CutClause::Downward: return "downward";
    case CutClause::PlusTimes: return "plus-times";
    case CutClause::Omega1: return "omega1";
  }
  return "?";
}

Formula cut_at(const Formula& J, const Term& t) { return J.substitute(cut_var(J), t); }

std::vector<Formula> cut_obligations(const Formula& J) {
  Var x = cut_var(J);
  Var y = std::max(J.max_var_plus_one(), x + 1);
  Term tx = V(x), ty = V(y);
  auto at = [&](const Term& t) { return J.substitute(x, t); };
  return {
      Formula::conj(at(Term::zero()), Formula::forall(x, Formula::imp(J, at(Term::succ(tx))))),
      Formula::forall(x, Formula::forall(y, Formula::imp(Formula::conj(J, Formula::atom("<=", {ty, tx})), at(ty)))),
      Formula::forall(x, Formula::forall(y, Formula::imp(Formula::conj(J, at(ty)),
                                                          Formula::conj(at(Term::add(tx, ty)), at(Term::mul(tx, ty)))))),
      Formula::forall(x, Formula::imp(J, at(Term::smash(tx, tx)))),
  };
}

void CutSpec::validate() const {
  auto goals = cut_obligations(J);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!obligations[i]) continue;
    std::string name(cut_clause_name(static_cast<CutClause>(i)));
    CheckResult r = [&] {
      try {
        return check_proof(*obligations[i], U, true);
      } catch (const std::exception& e) {
        throw CutError(name + " obligation proof: " + e.what());
      }
    }();
    if (!alpha_equal(r.conclusion, goals[i]))
      throw CutError(name + " obligation proof concludes " + print(r.conclusion) + ", expected " + print(goals[i]));
  }
}

CutSpec trivial_cut(const TheorySpec& U) {
  CutSpec c;
  c.J = Formula::eq(V(0), V(0));
  c.U = U;
  auto goals = cut_obligations(c.J);
  const Var e = 2, f = 3;
  auto refl_of = [](const Formula& eq) { return Proof::refl(eq.terms()[0]); };
  c.obligations[0] = Proof::and_i(Proof::refl(Term::zero()), intro_all(goals[0].rhs(), e, [&](const Formula& g) {
                                    return intro_imp(g, "h", [&](const Proof&) { return refl_of(g.rhs()); });
                                  }));
  c.obligations[1] = intro_all(goals[1], e, [&](const Formula& g) {
    return intro_all(g, f, [&](const Formula& h) { return intro_imp(h, "h", [&](const Proof&) { return refl_of(h.rhs()); }); });
  });
  c.obligations[2] = intro_all(goals[2], e, [&](const Formula& g) {
    return intro_all(g, f, [&](const Formula& h) {
      return intro_imp(h, "h", [&](const Proof&) { return Proof::and_i(refl_of(h.rhs().lhs()), refl_of(h.rhs().rhs())); });
    });
  });
  c.obligations[3] = intro_all(goals[3], e, [&](const Formula& g) {
    return intro_imp(g, "h", [&](const Proof&) { return refl_of(g.rhs()); });
  });
  return c;
}

Formula close_cut(const Formula& J0) {
  Var x = cut_var(J0);
  Var next = std::max(J0.max_var_plus_one(), x + 1);
  auto fresh = [&] { return next++; };
  using Stage = std::function<Formula(const Term&)>;
  Stage i1 = [&](const Term& t) {
    Var v = fresh();
    return Formula::bounded(K::BoundedAll, v, Term::succ(t), J0.substitute(x, V(v)));
  };
  auto shorten = [&](Stage prev, Fn op) -> Stage {
    return [&, prev, op](const Term& t) {
      Var v = fresh();
      return Formula::conj(prev(t), Formula::forall(v, Formula::imp(prev(V(v)), prev(Term::apply(op, {V(v), t})))));
    };
  };
  Stage i2 = shorten(i1, Fn::Add);
  Stage i3 = shorten(i2, Fn::Mul);
  Stage j = shorten(i3, Fn::Smash);
  return j(V(x));
}

Proof prove_cut_membership(const CutSpec& c, const Code& n) {
  if (n < 0) throw CutError("membership of a negative number");
  const Proof& p1 = need(c, CutClause::Progressive);
  const Proof& p3 = need(c, CutClause::PlusTimes);
  Var e = c.J.max_var_plus_one();
  Term te = V(e), two = iwb::two();
  auto at = [&](const Term& t) { return cut_at(c.J, t); };
  Proof j0 = Proof::and_e1(p1);
  Proof step = Proof::and_e2(p1);
  Proof j2 = Proof::imp_e(Proof::forall_e(step, Term::succ(Term::zero())),
                          Proof::imp_e(Proof::forall_e(step, Term::zero()), j0));
  // J(x) -> J(2x) and J(x) -> J(S(2x)), each built once.
  Formula dbl_goal = Formula::forall(e, Formula::imp(at(te), at(Term::mul(two, te))));
  Proof dbl = Proof::forall_i(
      dbl_goal, e,
      Proof::imp_i(at(te), "h",
                   Proof::and_e2(Proof::imp_e(Proof::forall_e(Proof::forall_e(p3, two), te),
                                              Proof::and_i(j2, Proof::assume("h", at(te)))))));
  Formula dbl1_goal = Formula::forall(e, Formula::imp(at(te), at(Term::succ(Term::mul(two, te)))));
  Proof dbl1 = Proof::forall_i(
      dbl1_goal, e,
      Proof::imp_i(at(te), "h",
                   Proof::imp_e(Proof::forall_e(step, Term::mul(two, te)),
                                Proof::imp_e(Proof::forall_e(dbl, te), Proof::assume("h", at(te))))));
  std::vector<bool> bits;
  for (Code m = n; m > 0; m /= 2) bits.push_back(mpz_odd_p(m.get_mpz_t()) != 0);
  Proof p = j0;
  Code value = 0;
  for (std::size_t i = bits.size(); i-- > 0;) {
    p = Proof::imp_e(Proof::forall_e(bits[i] ? dbl1 : dbl, numeral(value)), p);
    value = 2 * value + (bits[i] ? 1 : 0);
  }
  return p;
}

Proof prove_term_closure(const CutSpec& c, const Term& t) {
  const Proof& p1 = need(c, CutClause::Progressive);
  const Proof& p3 = need(c, CutClause::PlusTimes);
  std::set<Var> vs;
  t.collect_vars(vs);
  std::vector<Var> vars(vs.begin(), vs.end());
  auto at = [&](const Term& s) { return cut_at(c.J, s); };
  std::vector<Formula> hyps;
  for (Var v : vars) hyps.push_back(at(V(v)));
  // Right-nested conjunction, so hypothesis i is reached by i and_e2 steps.
  Formula hyp = hyps.empty() ? Formula::neg(Formula::bot()) : hyps.back();
  for (std::size_t i = hyps.size(); i-- > 1;) hyp = Formula::conj(hyps[i - 1], hyp);
  Proof h = Proof::assume("h", hyp);
  auto member = [&](std::size_t i) {
    Proof q = h;
    for (std::size_t k = 0; k < i; ++k) q = Proof::and_e2(q);
    return i + 1 < vars.size() ? Proof::and_e1(q) : q;
  };
  std::function<Proof(const Term&)> rec = [&](const Term& s) -> Proof {
    if (s.is_var()) return member(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), s.var_index()) - vars.begin()));
    const auto& a = s.args();
    switch (s.fn()) {
      case Fn::Zero: return Proof::and_e1(p1);
      case Fn::Succ: return Proof::imp_e(Proof::forall_e(Proof::and_e2(p1), a[0]), rec(a[0]));
      case Fn::Add:
      case Fn::Mul: {
        Proof both = Proof::imp_e(Proof::forall_e(Proof::forall_e(p3, a[0]), a[1]), Proof::and_i(rec(a[0]), rec(a[1])));
        return s.fn() == Fn::Add ? Proof::and_e1(both) : Proof::and_e2(both);
      }
      case Fn::Smash:
        if (a[0] == a[1]) return Proof::imp_e(Proof::forall_e(need(c, CutClause::Omega1), a[0]), rec(a[0]));
        [[fallthrough]];
      default: throw CutError("term closure does not support " + print(s));
    }
  };
  Proof body = rec(t);
  Formula goal = Formula::imp(hyp, at(t));
  Proof p = Proof::imp_i(hyp, "h", body);
  for (std::size_t i = vars.size(); i-- > 0;) {
    goal = Formula::forall(vars[i], goal);
    p = Proof::forall_i(goal, vars[i], p);
  }
  return p;
}

}  // namespace iwb
