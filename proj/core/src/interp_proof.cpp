#include <algorithm>

#include "iwb/checker.hpp"
#include "iwb/interp.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;
using Ctx = std::map<std::string, Proof>;

std::string cong_label(Symbol r, std::size_t i) { return "eq:" + r.name() + ":" + std::to_string(i); }

Proof identity_imp(const Formula& a, const std::string& label) {
  return Proof::imp_i(a, label, Proof::assume(label, a));
}

// Accepts every sentence as an axiom; used to read off open assumptions.
TheorySpec permissive(const Signature& sig) {
  TheorySpec t("any", sig);
  t.add_schema({"any", [](const Formula&) { return true; }, [](const Code&) { return std::vector<Formula>{}; }});
  return t;
}

class Translator {
public:
  Translator(const Translation& k, Var fresh) : k_(k), next_var_(fresh) {
    for (auto& [label, f] : equality_obligations(k.source)) eq_.emplace(label, f);
  }

  Proof run(const Proof& p, const Ctx& ctx) {
    const Formula& c = p.conclusion();
    auto tr = [&](std::size_t i) { return run(p.premise(i), ctx); };
    auto without = [&](std::initializer_list<std::string> labels) {
      Ctx out = ctx;
      for (const auto& l : labels) out.erase(l);
      return out;
    };
    switch (p.rule()) {
      case Rule::Assume: {
        auto it = ctx.find(p.label());
        if (it != ctx.end()) return it->second;
        return Proof::assume(p.label(), translate_formula(k_, c));
      }
      case Rule::Axiom: {
        Code code = p.code() >= 0 ? p.code() : code_syntax(c, k_.source);
        return Proof::assume(axiom_label(code), translate_formula(k_, c));
      }
      case Rule::AndI: return Proof::and_i(tr(0), tr(1));
      case Rule::AndE1: return Proof::and_e1(tr(0));
      case Rule::AndE2: return Proof::and_e2(tr(0));
      case Rule::OrI1: return Proof::or_i1(tr(0), translate_formula(k_, c.rhs()));
      case Rule::OrI2: return Proof::or_i2(translate_formula(k_, c.lhs()), tr(0));
      case Rule::OrE:
        return Proof::or_e(tr(0), p.label(), run(p.premise(1), without({p.label()})), p.label2(),
                           run(p.premise(2), without({p.label2()})));
      case Rule::ImpI:
        return Proof::imp_i(translate_formula(k_, c.lhs()), p.label(), run(p.premise(0), without({p.label()})));
      case Rule::ImpE: return Proof::imp_e(tr(0), tr(1));
      case Rule::NotI:
        return Proof::not_i(translate_formula(k_, c.lhs()), p.label(), run(p.premise(0), without({p.label()})));
      case Rule::NotE: return Proof::not_e(tr(0), tr(1));
      case Rule::BotE: return Proof::bot_e(translate_formula(k_, c), tr(0));
      case Rule::Raa: return Proof::raa(translate_formula(k_, c), p.label(), run(p.premise(0), without({p.label()})));
      case Rule::ForallI: {
        Var y = p.var();
        std::string dl = domain_label(y);
        Proof body = run(p.premise(0), without({dl}));
        Proof guarded = Proof::imp_i(k_.delta_at(Term::var(y)), dl, body);
        return Proof::forall_i(translate_formula(k_, c), y, guarded);
      }
      case Rule::ForallE: {
        Var v = variable(*p.term());
        return Proof::imp_e(Proof::forall_e(tr(0), *p.term()), dom(v, ctx));
      }
      case Rule::ExistsI: {
        Var v = variable(*p.term());
        return Proof::exists_i(translate_formula(k_, c), *p.term(), Proof::and_i(dom(v, ctx), tr(0)));
      }
      case Rule::ExistsE: {
        Proof ex = tr(0);
        Var y = p.var();
        const Formula& e = ex.conclusion();
        Formula pair = e.body().substitute(e.bound_var(), Term::var(y));
        Proof a = Proof::assume(p.label(), pair);
        Ctx inner = without({p.label(), domain_label(y)});
        inner.emplace(p.label(), Proof::and_e2(a));
        inner.emplace(domain_label(y), Proof::and_e1(a));
        return Proof::exists_e(ex, p.label(), y, run(p.premise(1), inner));
      }
      case Rule::Refl: {
        const Term& t = c.terms()[0];
        Var v = variable(t);
        Proof all = obligation("eq:refl");
        return Proof::imp_e(Proof::forall_e(all, t), dom(v, ctx));
      }
      case Rule::EqSubst: {
        const Formula& e = p.premise(0).conclusion();
        Var s = variable(e.terms()[0]);
        Var t = variable(e.terms()[1]);
        Proof eq = tr(0);
        Proof move = transport(*p.tmpl(), p.var(), s, t, eq, ctx);
        return Proof::imp_e(move, tr(1));
      }
      case Rule::Unfold:
      case Rule::Fold: throw TranslationError("translation of a bounded-quantifier step");
    }
    throw TranslationError("unknown rule");
  }

  // delta(x) for each remaining free variable is discharged through the
  // nonempty-domain obligation.
  Proof close_domains(Proof p) {
    TheorySpec any = permissive(k_.target);
    for (;;) {
      CheckResult r = check_proof(p, any);
      std::optional<Var> v;
      for (const auto& o : r.open)
        if (o.label.rfind("dom:", 0) == 0) v = static_cast<Var>(std::stoul(o.label.substr(4)));
      if (!v) return p;
      p = Proof::exists_e(nonempty(), domain_label(*v), *v, p);
    }
  }

private:
  static Var variable(const Term& t) {
    if (!t.is_var()) throw TranslationError("translation of a proof step on the function term " + print(t));
    return t.var_index();
  }

  std::string label() { return "tr:" + std::to_string(++labels_); }
  Var fresh() { return next_var_++; }

  Proof dom(Var v, const Ctx& ctx) const {
    auto it = ctx.find(domain_label(v));
    if (it != ctx.end()) return it->second;
    return Proof::assume(domain_label(v), k_.delta_at(Term::var(v)));
  }

  Proof obligation(const std::string& l) {
    auto it = eq_.find(l);
    if (it == eq_.end()) throw TranslationError("no equality obligation " + l);
    return Proof::assume(l, translate_formula(k_, it->second));
  }

  // |- exists x delta(x), from the nonempty-domain obligation.
  Proof nonempty() {
    Proof ne = obligation("eq:nonempty");
    Var w = fresh();
    std::string l = label();
    Formula pair = ne.conclusion().body().substitute(ne.conclusion().bound_var(), Term::var(w));
    Formula goal = Formula::exists(k_.delta_var, k_.delta);
    return Proof::exists_e(ne, l, w, Proof::exists_i(goal, Term::var(w), Proof::and_e1(Proof::assume(l, pair))));
  }

  // a -> b, b -> c |- a -> c
  Proof chain(const Proof& ab, const Proof& bc) {
    const Formula& a = ab.conclusion().lhs();
    std::string l = label();
    return Proof::imp_i(a, l, Proof::imp_e(bc, Proof::imp_e(ab, Proof::assume(l, a))));
  }

  Proof symmetric(Var s, Var t, const Proof& eq, const Ctx& ctx) {
    // cong(=,1) at (s, s; t): s = t -> (s = s -> t = s)
    Proof refl = Proof::imp_e(Proof::forall_e(obligation("eq:refl"), Term::var(s)), dom(s, ctx));
    Proof step = cong(Symbol::identity(), 0, {Term::var(s), Term::var(s)}, Term::var(t), ctx);
    return Proof::imp_e(Proof::imp_e(step, eq), refl);
  }

  // Instance of cong(R, i) at args and y, guards discharged:
  //   x_i =^k y -> (R^k(args) -> R^k(args[i:=y]))
  Proof cong(Symbol r, std::size_t i, const std::vector<Term>& args, const Term& y, const Ctx& ctx) {
    Proof p = obligation(cong_label(r, i + 1));
    for (const auto& a : args) p = Proof::imp_e(Proof::forall_e(p, a), dom(a.var_index(), ctx));
    return Proof::imp_e(Proof::forall_e(p, y), dom(y.var_index(), ctx));
  }

  // |- psi[x:=s]^k -> psi[x:=t]^k, given eq : s =^k t.
  Proof transport(const Formula& psi, Var x, Var s, Var t, const Proof& eq, const Ctx& ctx) {
    Term ts = Term::var(s), tt = Term::var(t);
    Formula from = translate_formula(k_, psi.substitute(x, ts));
    if (!psi.is_free(x) || s == t) return identity_imp(from, label());
    auto back = [&](const Formula& f) {
      Proof sym = symmetric(s, t, eq, ctx);
      return transport(f, x, t, s, sym, ctx);
    };
    switch (psi.kind()) {
      case K::Atom: {
        std::vector<Term> cur;
        for (const auto& a : psi.terms()) cur.push_back(a.substitute(x, ts));
        std::optional<Proof> acc;
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (!(psi.terms()[i].is_var() && psi.terms()[i].var_index() == x)) continue;
          Proof step = Proof::imp_e(cong(psi.rel(), i, cur, tt, ctx), eq);
          acc = acc ? chain(*acc, step) : step;
          cur[i] = tt;
        }
        return *acc;
      }
      case K::Not: {
        Proof ts_back = back(psi.lhs());
        Formula at = translate_formula(k_, psi.lhs().substitute(x, tt));
        std::string l = label(), l2 = label();
        Proof bot = Proof::not_e(Proof::imp_e(ts_back, Proof::assume(l2, at)), Proof::assume(l, from));
        return Proof::imp_i(from, l, Proof::not_i(at, l2, bot));
      }
      case K::And: {
        Proof ta = transport(psi.lhs(), x, s, t, eq, ctx);
        Proof tb = transport(psi.rhs(), x, s, t, eq, ctx);
        std::string l = label();
        Proof h = Proof::assume(l, from);
        return Proof::imp_i(from, l, Proof::and_i(Proof::imp_e(ta, Proof::and_e1(h)), Proof::imp_e(tb, Proof::and_e2(h))));
      }
      case K::Or: {
        Proof ta = transport(psi.lhs(), x, s, t, eq, ctx);
        Proof tb = transport(psi.rhs(), x, s, t, eq, ctx);
        const Formula& as = ta.conclusion().lhs();
        const Formula& at = ta.conclusion().rhs();
        const Formula& bs = tb.conclusion().lhs();
        const Formula& bt = tb.conclusion().rhs();
        std::string l = label(), l1 = label(), l2 = label();
        Proof left = Proof::or_i1(Proof::imp_e(ta, Proof::assume(l1, as)), bt);
        Proof right = Proof::or_i2(at, Proof::imp_e(tb, Proof::assume(l2, bs)));
        return Proof::imp_i(from, l, Proof::or_e(Proof::assume(l, from), l1, left, l2, right));
      }
      case K::Imp: {
        Proof ta = back(psi.lhs());
        Proof tb = transport(psi.rhs(), x, s, t, eq, ctx);
        const Formula& at = ta.conclusion().lhs();
        std::string l = label(), l2 = label();
        Proof body = Proof::imp_e(tb, Proof::imp_e(Proof::assume(l, from), Proof::imp_e(ta, Proof::assume(l2, at))));
        return Proof::imp_i(from, l, Proof::imp_i(at, l2, body));
      }
      case K::Forall:
      case K::Exists: {
        Var z = fresh();
        Term tz = Term::var(z);
        Formula inner = psi.body().substitute(psi.bound_var(), tz);
        Formula to = translate_formula(k_, psi.substitute(x, tt));
        std::string l = label(), l2 = label();
        Proof h = Proof::assume(l, from);
        if (psi.is(K::Forall)) {
          Proof dz = Proof::assume(l2, k_.delta_at(tz));
          Ctx c2 = ctx;
          c2.insert_or_assign(domain_label(z), dz);
          Proof t1 = transport(inner, x, s, t, eq, c2);
          Proof body = Proof::imp_e(t1, Proof::imp_e(Proof::forall_e(h, tz), dz));
          return Proof::imp_i(from, l, Proof::forall_i(to, z, Proof::imp_i(k_.delta_at(tz), l2, body)));
        }
        Formula pair = from.body().substitute(from.bound_var(), tz);
        Proof a = Proof::assume(l2, pair);
        Ctx c2 = ctx;
        c2.insert_or_assign(domain_label(z), Proof::and_e1(a));
        Proof t1 = transport(inner, x, s, t, eq, c2);
        Proof wit = Proof::exists_i(to, tz, Proof::and_i(Proof::and_e1(a), Proof::imp_e(t1, Proof::and_e2(a))));
        return Proof::imp_i(from, l, Proof::exists_e(h, l2, z, wit));
      }
      default: throw TranslationError("translation of a bounded quantifier in an equality step");
    }
  }

  const Translation& k_;
  Var next_var_;
  std::size_t labels_ = 0;
  std::map<std::string, Formula> eq_;
};

}  // namespace

std::string axiom_label(const Code& code) { return "ax:" + code.get_str(); }
std::string domain_label(Var v) { return "dom:" + std::to_string(v); }

std::vector<std::pair<std::string, Formula>> equality_obligations(const Signature& sig) {
  std::vector<std::pair<std::string, Formula>> out;
  Term x = Term::var(0);
  out.emplace_back("eq:nonempty", Formula::exists(0, Formula::eq(x, x)));
  out.emplace_back("eq:refl", Formula::forall(0, Formula::eq(x, x)));
  for (const auto& r : sig.symbols()) {
    int m = sig.arity(r);
    for (int i = 0; i < m; ++i) {
      std::vector<Term> args, moved;
      for (int j = 0; j < m; ++j) args.push_back(Term::var(static_cast<Var>(j)));
      Term y = Term::var(static_cast<Var>(m));
      moved = args;
      moved[static_cast<std::size_t>(i)] = y;
      Formula f = Formula::imp(Formula::eq(args[static_cast<std::size_t>(i)], y),
                               Formula::imp(Formula::atom(r, args), Formula::atom(r, moved)));
      f = Formula::forall(static_cast<Var>(m), f);
      for (int j = m - 1; j >= 0; --j) f = Formula::forall(static_cast<Var>(j), f);
      out.emplace_back(cong_label(r, static_cast<std::size_t>(i + 1)), f);
    }
  }
  return out;
}

TranslatedProof translate_proof(const Translation& k, const Proof& p) {
  CheckResult src = check_proof(p, permissive(k.source));
  if (!src.conclusion.is_sentence()) throw TranslationError("conclusion is not a sentence: " + print(src.conclusion));
  for (const auto& o : src.open) {
    if (!o.formula.is_sentence())
      throw TranslationError("open assumption " + o.label + " is not a sentence: " + print(o.formula));
    if (o.label.find(':') != std::string::npos) throw TranslationError("reserved assumption label " + o.label);
  }
  Var fresh = std::max({k.delta.max_var_plus_one(), k.delta_var + 1, Var{0}});
  for (const auto& [r, im] : k.rel) {
    fresh = std::max(fresh, im.body.max_var_plus_one());
    for (Var v : im.params) fresh = std::max(fresh, v + 1);
  }
  visit_nodes(p, [&](const Proof& q, const std::string&) {
    fresh = std::max(fresh, q.conclusion().max_var_plus_one());
    if (q.tmpl()) fresh = std::max(fresh, q.tmpl()->max_var_plus_one());
    fresh = std::max(fresh, q.var() + 1);
  });
  Translator t(k, fresh);
  Proof out = t.close_domains(t.run(p, {}));
  TranslatedProof res{out, {}};
  for (const auto& o : check_proof(out, permissive(k.target)).open)
    if (o.label.rfind("ax:", 0) == 0 || o.label.rfind("eq:", 0) == 0) res.obligations.emplace_back(o.label, o.formula);
  return res;
}

}  // namespace iwb
