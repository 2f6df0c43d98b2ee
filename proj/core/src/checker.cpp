#include "iwb/checker.hpp"

#include <algorithm>
#include <map>

namespace iwb {

namespace {

using Open = std::map<std::string, Formula>;

bool is_eq(const Formula& f) { return f.is(Formula::Kind::Atom) && f.rel() == Symbol::identity(); }

class Checker {
public:
  explicit Checker(const TheorySpec& U) : U_(U) {}

  Open check(const Proof& p, const std::string& path) {
    auto fail = [&](const std::string& msg) -> ProofError { return ProofError(path, msg); };
    auto sub = [&](std::size_t i) { return path.empty() ? std::to_string(i) : path + "." + std::to_string(i); };
    const Formula& c = p.conclusion();
    try {
      U_.signature().check(c);
      if (p.tmpl()) U_.signature().check(*p.tmpl());
      if (p.term()) U_.signature().check(*p.term());
    } catch (const SyntaxError& e) {
      throw fail(e.what());
    }

    std::size_t want = 0;
    switch (p.rule()) {
      case Rule::Assume:
      case Rule::Axiom:
      case Rule::Refl: want = 0; break;
      case Rule::AndI:
      case Rule::ImpE:
      case Rule::NotE:
      case Rule::ExistsE:
      case Rule::EqSubst: want = 2; break;
      case Rule::OrE: want = 3; break;
      default: want = 1;
    }
    if (p.premises().size() != want)
      throw fail(std::string(rule_name(p.rule())) + " needs " + std::to_string(want) + " premises");

    std::vector<Open> opens;
    for (std::size_t i = 0; i < p.premises().size(); ++i) opens.push_back(check(p.premise(i), sub(i)));
    auto prem = [&](std::size_t i) -> const Formula& { return p.premise(i).conclusion(); };
    auto same = [](const Formula& a, const Formula& b) { return alpha_equal(a, b); };

    switch (p.rule()) {
      case Rule::Assume:
        if (p.label().empty()) throw fail("assumption without label");
        return Open{{p.label(), c}};
      case Rule::Axiom: {
        if (!c.is_sentence()) throw fail("axiom is not a sentence");
        if (!U_.recognizes(c)) throw fail("not an axiom of " + U_.name() + ": " + print(c));
        if (p.code() >= 0 && p.code() != U_.code(c)) throw fail("recorded axiom code does not match the axiom");
        return {};
      }
      case Rule::AndI:
        if (!c.is(Formula::Kind::And) || !same(c.lhs(), prem(0)) || !same(c.rhs(), prem(1)))
          throw fail("and-i: conclusion is not the conjunction of the premises");
        break;
      case Rule::AndE1:
      case Rule::AndE2: {
        const Formula& a = prem(0);
        if (!a.is(Formula::Kind::And)) throw fail("and-e: premise is not a conjunction");
        if (!same(c, p.rule() == Rule::AndE1 ? a.lhs() : a.rhs())) throw fail("and-e: wrong conjunct");
        break;
      }
      case Rule::OrI1:
      case Rule::OrI2:
        if (!c.is(Formula::Kind::Or) || !same(p.rule() == Rule::OrI1 ? c.lhs() : c.rhs(), prem(0)))
          throw fail("or-i: premise is not the named disjunct");
        break;
      case Rule::OrE: {
        const Formula& d = prem(0);
        if (!d.is(Formula::Kind::Or)) throw fail("or-e: first premise is not a disjunction");
        if (!same(prem(1), c) || !same(prem(2), c)) throw fail("or-e: cases do not conclude the conclusion");
        discharge(opens[1], p.label(), d.lhs(), path);
        discharge(opens[2], p.label2(), d.rhs(), path);
        break;
      }
      case Rule::ImpI:
        if (!c.is(Formula::Kind::Imp) || !same(c.rhs(), prem(0))) throw fail("imp-i: consequent does not match premise");
        discharge(opens[0], p.label(), c.lhs(), path);
        break;
      case Rule::ImpE: {
        const Formula& i = prem(0);
        if (!i.is(Formula::Kind::Imp)) throw fail("imp-e: first premise is not an implication");
        if (!same(i.lhs(), prem(1))) throw fail("imp-e: minor premise is not the antecedent");
        if (!same(i.rhs(), c)) throw fail("imp-e: conclusion is not the consequent");
        break;
      }
      case Rule::NotI:
        if (!c.is(Formula::Kind::Not) || !prem(0).is(Formula::Kind::Bot)) throw fail("not-i: needs a proof of bot");
        discharge(opens[0], p.label(), c.lhs(), path);
        break;
      case Rule::NotE:
        if (!c.is(Formula::Kind::Bot)) throw fail("not-e concludes bot");
        if (!prem(1).is(Formula::Kind::Not) || !same(prem(1).lhs(), prem(0)))
          throw fail("not-e: second premise is not the negation of the first");
        break;
      case Rule::BotE:
        if (!prem(0).is(Formula::Kind::Bot)) throw fail("bot-e: premise is not bot");
        break;
      case Rule::Raa:
        if (!prem(0).is(Formula::Kind::Bot)) throw fail("raa: premise is not bot");
        discharge(opens[0], p.label(), Formula::neg(c), path);
        break;
      case Rule::ForallI: {
        if (!c.is(Formula::Kind::Forall)) throw fail("forall-i: conclusion is not universal");
        Var y = p.var();
        if (!same(c.body().substitute(c.bound_var(), Term::var(y)), prem(0)))
          throw fail("forall-i: premise is not the instance at the eigenvariable");
        if (c.is_free(y)) throw fail("forall-i: eigenvariable free in the conclusion");
        for (const auto& [l, f] : opens[0])
          if (f.is_free(y)) throw fail("forall-i: eigenvariable free in open assumption " + l);
        break;
      }
      case Rule::ForallE: {
        const Formula& a = prem(0);
        if (!a.is(Formula::Kind::Forall)) throw fail("forall-e: premise is not universal");
        if (!same(a.body().substitute(a.bound_var(), *p.term()), c)) throw fail("forall-e: wrong instance");
        break;
      }
      case Rule::ExistsI:
        if (!c.is(Formula::Kind::Exists)) throw fail("exists-i: conclusion is not existential");
        if (!same(c.body().substitute(c.bound_var(), *p.term()), prem(0))) throw fail("exists-i: premise is not the instance");
        break;
      case Rule::ExistsE: {
        const Formula& e = prem(0);
        if (!e.is(Formula::Kind::Exists)) throw fail("exists-e: first premise is not existential");
        if (!same(prem(1), c)) throw fail("exists-e: second premise does not conclude the conclusion");
        Var y = p.var();
        discharge(opens[1], p.label(), e.body().substitute(e.bound_var(), Term::var(y)), path);
        if (c.is_free(y)) throw fail("exists-e: eigenvariable free in the conclusion");
        if (e.is_free(y)) throw fail("exists-e: eigenvariable free in the existential");
        for (const auto& [l, f] : opens[1])
          if (f.is_free(y)) throw fail("exists-e: eigenvariable free in open assumption " + l);
        break;
      }
      case Rule::Refl:
        if (!is_eq(c) || !(c.terms()[0] == c.terms()[1])) throw fail("refl: conclusion is not t = t");
        break;
      case Rule::EqSubst: {
        const Formula& e = prem(0);
        if (!is_eq(e)) throw fail("eq-subst: first premise is not an equation");
        const Formula& t = *p.tmpl();
        if (!same(t.substitute(p.var(), e.terms()[0]), prem(1))) throw fail("eq-subst: second premise is not template[x:=s]");
        if (!same(t.substitute(p.var(), e.terms()[1]), c)) throw fail("eq-subst: conclusion is not template[x:=t]");
        break;
      }
      case Rule::Unfold:
        if (!prem(0).is_bounded_quantifier() || !same(unfold_bounded(prem(0)), c))
          throw fail("unfold: conclusion is not the relativized form of the premise");
        break;
      case Rule::Fold:
        if (!c.is_bounded_quantifier() || !same(unfold_bounded(c), prem(0)))
          throw fail("fold: premise is not the relativized form of the conclusion");
        break;
    }
    return merge(opens, path);
  }

private:
  void discharge(Open& open, const std::string& label, const Formula& f, const std::string& path) {
    if (label.empty()) throw ProofError(path, "missing discharge label");
    auto it = open.find(label);
    if (it == open.end()) return;  // vacuous discharge
    if (!alpha_equal(it->second, f))
      throw ProofError(path, "label " + label + " discharges " + print(f) + " but the assumption is " + print(it->second));
    open.erase(it);
  }

  Open merge(std::vector<Open>& opens, const std::string& path) {
    Open out;
    for (auto& o : opens)
      for (auto& [l, f] : o) {
        auto [it, fresh] = out.emplace(l, f);
        if (!fresh && !alpha_equal(it->second, f))
          throw ProofError(path, "label " + l + " names two different open assumptions");
      }
    return out;
  }

  const TheorySpec& U_;
};

}  // namespace

CheckResult check_proof(const Proof& p, const TheorySpec& U, bool closed) {
  Checker ck(U);
  Open open = ck.check(p, "");
  if (closed && !open.empty()) throw ProofError("", "open assumption " + open.begin()->first + ": " + print(open.begin()->second));
  CheckResult r{p.conclusion(), {}};
  for (auto& [l, f] : open) r.open.push_back({l, f});
  return r;
}

ProofStats proof_stats(const Proof& p, const TheorySpec& U) {
  ProofStats s;
  bool first_code = true;
  visit_nodes(p, [&](const Proof& q, const std::string& path) {
    ++s.nodes;
    if (q.rule() == Rule::Axiom) {
      Code c = q.code() >= 0 ? q.code() : U.code(q.conclusion());
      if (first_code || c > s.max_axiom_code) {
        s.max_axiom_code = c;
        s.max_code_path = path;
        first_code = false;
      }
    }
    unsigned r = rho(q.conclusion());
    if (q.tmpl()) r = std::max(r, rho(*q.tmpl()));
    if (s.nodes == 1 || r > s.max_rho) {
      s.max_rho = r;
      s.max_rho_path = path;
    }
  });
  return s;
}

RestrictedVerdict check_restricted(const Proof& p, const TheorySpec& U, const Code& n) {
  RestrictedVerdict v;
  v.stats = proof_stats(p, U);
  visit_nodes(p, [&](const Proof& q, const std::string& path) {
    if (!v.ok) return;
    if (q.rule() == Rule::Axiom) {
      Code c = q.code() >= 0 ? q.code() : U.code(q.conclusion());
      if (c > n) {
        v.ok = false;
        v.path = path;
        v.reason = "axiom code " + c.get_str() + " exceeds " + n.get_str();
        return;
      }
    }
    unsigned r = rho(q.conclusion());
    if (q.tmpl()) r = std::max(r, rho(*q.tmpl()));
    if (Code(r) > n) {
      v.ok = false;
      v.path = path;
      v.reason = "formula of complexity " + std::to_string(r) + " exceeds " + n.get_str();
    }
  });
  return v;
}

}  // namespace iwb
