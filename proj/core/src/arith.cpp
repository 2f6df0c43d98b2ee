#include "iwb/arith.hpp"

#include <algorithm>

#include "iwb/proof_kit.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;

std::optional<std::size_t> unary_value(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (!cur->is_var() && cur->fn() == Fn::Succ) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->is_var() || cur->fn() != Fn::Zero) return std::nullopt;
  return n;
}

bool is_rel(const Formula& f, std::string_view name) { return f.is(K::Atom) && f.rel().name() == name; }

struct Truth {
  const ArithOptions& opt;

  bool operator()(const Formula& f, std::map<Var, Code>& env) const {
    switch (f.kind()) {
      case K::Atom: {
        if (f.terms().size() != 2) throw OutsideFragment("relation " + f.rel().name() + " is not arithmetic");
        Code a = eval_term(f.terms()[0], env), b = eval_term(f.terms()[1], env);
        if (is_rel(f, "=")) return a == b;
        if (is_rel(f, "<")) return a < b;
        if (is_rel(f, "<=")) return a <= b;
        throw OutsideFragment("relation " + f.rel().name() + " is not arithmetic");
      }
      case K::Bot: return false;
      case K::Not: return !(*this)(f.lhs(), env);
      case K::And: return (*this)(f.lhs(), env) && (*this)(f.rhs(), env);
      case K::Or: return (*this)(f.lhs(), env) || (*this)(f.rhs(), env);
      case K::Imp: return !(*this)(f.lhs(), env) || (*this)(f.rhs(), env);
      case K::Forall:
      case K::Exists: {
        bool want = f.is(K::Exists);
        for (std::size_t i = 0; i <= opt.witness_limit; ++i)
          if (with(f.bound_var(), Code(static_cast<unsigned long>(i)), f.body(), env) == want) return want;
        throw OutsideFragment("no decision for an unbounded quantifier below the witness limit: " + print(f));
      }
      default: {
        Code m = eval_term(f.bound(), env);
        if (f.is(K::SharpAll) || f.is(K::SharpEx)) m = static_cast<unsigned long>(len(m));
        bool want = f.is(K::BoundedEx) || f.is(K::SharpEx);
        for (Code i = 0; i < m; ++i)
          if (with(f.bound_var(), i, f.body(), env) == want) return want;
        return !want;
      }
    }
  }

  bool with(Var x, const Code& v, const Formula& body, std::map<Var, Code>& env) const {
    auto saved = env.find(x) == env.end() ? std::nullopt : std::optional<Code>(env[x]);
    env[x] = v;
    bool r = (*this)(body, env);
    if (saved) env[x] = *saved;
    else env.erase(x);
    return r;
  }
};

class Prover {
public:
  Prover(const TheorySpec& base, const ArithOptions& opt) : base_(base), opt_(opt), labels_("a") {
    const char* names[] = {"succ-ne-zero", "succ-inj", "add0",  "addS",    "mul0",    "mulS",
                           "lt0",          "ltS",      "lt-intro", "le-elim", "le-intro"};
    auto axioms = base_arithmetic().finite_axioms();
    for (std::size_t i = 0; i < axioms.size(); ++i) ax_.emplace(names[i], axioms[i]);
  }

  bool truth(const Formula& f) {
    std::map<Var, Code> env;
    return Truth{opt_}(f, env);
  }

  std::size_t value(const Term& t) {
    Code v = eval_term(t);
    if (v > static_cast<unsigned long>(opt_.max_value))
      throw OutsideFragment("value " + v.get_str() + " of " + print(t) + " exceeds the trace limit");
    return v.get_ui();
  }

  // t = u(n)
  std::pair<std::size_t, Proof> eval(const Term& t) {
    if (auto n = unary_value(t)) return {*n, Proof::refl(t)};
    if (t.is_var()) throw OutsideFragment("open term " + print(t));
    const Var h = 0;
    switch (t.fn()) {
      case Fn::Succ: {
        auto [v, p] = eval(t.args()[0]);
        return {v + 1, kit::congruence(p, Term::succ(Term::var(h)), h)};
      }
      case Fn::Add:
      case Fn::Mul: {
        auto [a, pa] = eval(t.args()[0]);
        auto [b, pb] = eval(t.args()[1]);
        bool add = t.fn() == Fn::Add;
        auto op = [&](Term l, Term r) { return add ? Term::add(l, r) : Term::mul(l, r); };
        Proof c1 = kit::congruence(pa, op(Term::var(h), t.args()[1]), h);
        Proof c2 = kit::congruence(pb, op(unary(a), Term::var(h)), h);
        value(t);
        Proof lemma = add ? add_lemma(a, b) : mul_lemma(a, b);
        return {add ? a + b : a * b, kit::trans(kit::trans(c1, c2), lemma)};
      }
      default: throw OutsideFragment("function symbol " + std::string(fn_name(t.fn())) + " is not traced");
    }
  }

  Proof prove(const Formula& f) {
    switch (f.kind()) {
      case K::Atom: {
        auto [s, t] = sides(f);
        auto [a, ps] = eval(s);
        auto [b, pt] = eval(t);
        if (is_rel(f, "=")) {
          if (a != b) throw FalseSentence("false: " + print(f));
          return kit::trans(ps, kit::symm(pt));
        }
        if (is_rel(f, "<")) {
          if (a >= b) throw FalseSentence("false: " + print(f));
          return transport(f, ps, pt, less(a, b));
        }
        if (a > b) throw FalseSentence("false: " + print(f));
        Formula lt = Formula::atom("<", {unary(a), unary(b)});
        Formula eq = Formula::eq(unary(a), unary(b));
        Proof disj = a < b ? Proof::or_i1(less(a, b), eq) : Proof::or_i2(lt, Proof::refl(unary(a)));
        return transport(f, ps, pt, kit::mp(ax("le-intro", {unary(a), unary(b)}), disj));
      }
      case K::Bot: throw FalseSentence("false: bot");
      case K::Not: return refute(f.lhs());
      case K::And: return Proof::and_i(prove(f.lhs()), prove(f.rhs()));
      case K::Or:
        if (truth(f.lhs())) return Proof::or_i1(prove(f.lhs()), f.rhs());
        return Proof::or_i2(f.lhs(), prove(f.rhs()));
      case K::Imp: {
        std::string l = labels_.next();
        if (!truth(f.lhs()))
          return Proof::imp_i(f.lhs(), l, Proof::bot_e(f.rhs(), Proof::not_e(Proof::assume(l, f.lhs()), refute(f.lhs()))));
        return Proof::imp_i(f.lhs(), l, prove(f.rhs()));
      }
      case K::Exists:
        for (std::size_t i = 0; i <= opt_.witness_limit; ++i) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          if (truth(inst)) return Proof::exists_i(f, unary(i), prove(inst));
        }
        throw OutsideFragment("no witness below the limit for " + print(f));
      case K::Forall: throw OutsideFragment("unbounded universal " + print(f));
      case K::BoundedEx: {
        auto [m, pt] = eval(f.bound());
        for (std::size_t i = 0; i < m; ++i) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          if (!truth(inst)) continue;
          Proof lt = below(i, f.bound(), pt);
          Formula un = unfold_bounded(f);
          return Proof::fold(f, Proof::exists_i(un, unary(i), Proof::and_i(lt, prove(inst))));
        }
        throw FalseSentence("false: " + print(f));
      }
      case K::BoundedAll: {
        auto [m, pt] = eval(f.bound());
        Var y = fresh(f);
        Formula body_y = f.body().substitute(f.bound_var(), Term::var(y));
        Formula guard = Formula::atom("<", {Term::var(y), f.bound()});
        std::string l = labels_.next();
        Var h = fresh(f, y);
        Proof lt = Proof::eq_subst(h, Formula::atom("<", {Term::var(y), Term::var(h)}), pt, Proof::assume(l, guard));
        Proof body = split(body_y, lt, Term::var(y), m, [&](std::size_t i, const Proof& e) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          Var g = fresh(f, std::max(y, h) + 1);
          return Proof::eq_subst(g, f.body().substitute(f.bound_var(), Term::var(g)), kit::symm(e), prove(inst));
        });
        return Proof::fold(f, Proof::forall_i(unfold_bounded(f), y, Proof::imp_i(guard, l, body)));
      }
      default: throw OutsideFragment("sharply bounded quantifier " + print(f));
    }
  }

  // ¬f for a false f
  Proof refute(const Formula& f) {
    std::string l = labels_.next();
    auto assumed = [&] { return Proof::assume(l, f); };
    switch (f.kind()) {
      case K::Atom: {
        auto [s, t] = sides(f);
        auto [a, ps] = eval(s);
        auto [b, pt] = eval(t);
        Proof un = untransport(f, ps, pt, assumed());
        if (is_rel(f, "=")) {
          if (a == b) throw FalseSentence("true, cannot refute: " + print(f));
          return Proof::not_i(f, l, neq(a, b, un));
        }
        if (is_rel(f, "<")) {
          if (a < b) throw FalseSentence("true, cannot refute: " + print(f));
          return Proof::not_i(f, l, lt_absurd(a, b, un));
        }
        if (a <= b) throw FalseSentence("true, cannot refute: " + print(f));
        Proof d = kit::mp(ax("le-elim", {unary(a), unary(b)}), un);
        std::string l1 = labels_.next(), l2 = labels_.next();
        Proof bot = Proof::or_e(d, l1, lt_absurd(a, b, Proof::assume(l1, d.conclusion().lhs())), l2,
                                neq(a, b, Proof::assume(l2, d.conclusion().rhs())));
        return Proof::not_i(f, l, bot);
      }
      case K::Bot: return Proof::not_i(f, l, assumed());
      case K::Not: return Proof::not_i(f, l, Proof::not_e(prove(f.lhs()), assumed()));
      case K::And:
        if (!truth(f.lhs())) return Proof::not_i(f, l, Proof::not_e(Proof::and_e1(assumed()), refute(f.lhs())));
        return Proof::not_i(f, l, Proof::not_e(Proof::and_e2(assumed()), refute(f.rhs())));
      case K::Or: {
        std::string l1 = labels_.next(), l2 = labels_.next();
        Proof bot = Proof::or_e(assumed(), l1, Proof::not_e(Proof::assume(l1, f.lhs()), refute(f.lhs())), l2,
                                Proof::not_e(Proof::assume(l2, f.rhs()), refute(f.rhs())));
        return Proof::not_i(f, l, bot);
      }
      case K::Imp:
        return Proof::not_i(f, l, Proof::not_e(kit::mp(assumed(), prove(f.lhs())), refute(f.rhs())));
      case K::Forall:
        for (std::size_t i = 0; i <= opt_.witness_limit; ++i) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          if (!truth(inst)) return Proof::not_i(f, l, Proof::not_e(Proof::forall_e(assumed(), unary(i)), refute(inst)));
        }
        throw OutsideFragment("no counterexample below the limit for " + print(f));
      case K::Exists: throw OutsideFragment("negated unbounded existential " + print(f));
      case K::BoundedAll: {
        auto [m, pt] = eval(f.bound());
        for (std::size_t i = 0; i < m; ++i) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          if (truth(inst)) continue;
          Proof all = Proof::forall_e(Proof::unfold(assumed()), unary(i));
          return Proof::not_i(f, l, Proof::not_e(kit::mp(all, below(i, f.bound(), pt)), refute(inst)));
        }
        throw FalseSentence("true, cannot refute: " + print(f));
      }
      case K::BoundedEx: {
        auto [m, pt] = eval(f.bound());
        Var y = fresh(f);
        Formula body_y = f.body().substitute(f.bound_var(), Term::var(y));
        Formula guard = Formula::atom("<", {Term::var(y), f.bound()});
        std::string lm = labels_.next();
        Proof witness = Proof::assume(lm, Formula::conj(guard, body_y));
        Var h = fresh(f, y);
        Proof lt = Proof::eq_subst(h, Formula::atom("<", {Term::var(y), Term::var(h)}), pt, Proof::and_e1(witness));
        Proof bot = split(Formula::bot(), lt, Term::var(y), m, [&](std::size_t i, const Proof& e) {
          Formula inst = f.body().substitute(f.bound_var(), unary(i));
          Var g = fresh(f, std::max(y, h) + 1);
          Proof at = Proof::eq_subst(g, f.body().substitute(f.bound_var(), Term::var(g)), e, Proof::and_e2(witness));
          return Proof::not_e(at, refute(inst));
        });
        return Proof::not_i(f, l, Proof::exists_e(Proof::unfold(assumed()), lm, y, bot));
      }
      default: throw OutsideFragment("sharply bounded quantifier " + print(f));
    }
  }

private:
  Proof ax(const std::string& name, const std::vector<Term>& ts) {
    const Formula& f = ax_.at(name);
    if (!base_.recognizes(f)) throw OutsideFragment("theory " + base_.name() + " lacks the axiom " + print(f));
    return kit::inst(Proof::axiom(f, base_.code(f)), ts);
  }

  static std::pair<Term, Term> sides(const Formula& f) {
    if (f.terms().size() != 2 || !(is_rel(f, "=") || is_rel(f, "<") || is_rel(f, "<=")))
      throw OutsideFragment("relation " + f.rel().name() + " is not arithmetic");
    return {f.terms()[0], f.terms()[1]};
  }

  // Eigenvariables are never reused: an outer case split may still have an
  // open assumption about an earlier one.
  Var fresh(const Formula& f, Var floor = 0) {
    Var v = std::max({f.max_var_plus_one(), floor + 1, next_var_});
    next_var_ = v + 1;
    return v;
  }

  // u(a) + u(b) = u(a+b)
  Proof add_lemma(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
    Proof p = b == 0 ? ax("add0", {unary(a)}) : [&] {
      Proof step = ax("addS", {unary(a), unary(b - 1)});
      Proof c = kit::congruence(add_lemma(a, b - 1), Term::succ(Term::var(0)), 0);
      return kit::trans(step, c);
    }();
    add_memo_.emplace(key, p);
    return p;
  }

  // u(a) * u(b) = u(ab)
  Proof mul_lemma(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    Proof p = b == 0 ? ax("mul0", {unary(a)}) : [&] {
      Proof step = ax("mulS", {unary(a), unary(b - 1)});
      Proof c = kit::congruence(mul_lemma(a, b - 1), Term::add(Term::var(0), unary(a)), 0);
      return kit::trans(kit::trans(step, c), add_lemma(a * (b - 1), a));
    }();
    mul_memo_.emplace(key, p);
    return p;
  }

  // u(a) < u(b) for a < b
  Proof less(std::size_t a, std::size_t b) {
    std::size_t c = b - a - 1;
    return kit::mp(ax("lt-intro", {unary(a), unary(b), unary(c)}), add_lemma(a, c + 1));
  }

  // u(i) < t from t = u(m), i < m
  Proof below(std::size_t i, const Term& t, const Proof& pt) {
    return Proof::eq_subst(0, Formula::atom("<", {unary(i), Term::var(0)}), kit::symm(pt), less(i, value(t)));
  }

  // R(u(a),u(b)) -> R(s,t)
  Proof transport(const Formula& f, const Proof& ps, const Proof& pt, const Proof& p) {
    const Term& s = f.terms()[0];
    const Term& t = pt.conclusion().terms()[1];
    Proof q = Proof::eq_subst(0, Formula::atom(f.rel(), {Term::var(0), t}), kit::symm(ps), p);
    return Proof::eq_subst(0, Formula::atom(f.rel(), {s, Term::var(0)}), kit::symm(pt), q);
  }

  // R(s,t) -> R(u(a),u(b))
  Proof untransport(const Formula& f, const Proof& ps, const Proof& pt, const Proof& p) {
    const Term& t = f.terms()[1];
    const Term& ua = ps.conclusion().terms()[1];
    Proof q = Proof::eq_subst(0, Formula::atom(f.rel(), {Term::var(0), t}), ps, p);
    return Proof::eq_subst(0, Formula::atom(f.rel(), {ua, Term::var(0)}), pt, q);
  }

  // bot from u(a) = u(b), a != b
  Proof neq(std::size_t a, std::size_t b, const Proof& p) {
    if (a > 0 && b > 0) return neq(a - 1, b - 1, kit::mp(ax("succ-inj", {unary(a - 1), unary(b - 1)}), p));
    if (b == 0) return Proof::not_e(p, ax("succ-ne-zero", {unary(a - 1)}));
    return Proof::not_e(kit::symm(p), ax("succ-ne-zero", {unary(b - 1)}));
  }

  // bot from u(a) < u(b), a >= b
  Proof lt_absurd(std::size_t a, std::size_t b, const Proof& p) {
    if (b == 0) return Proof::not_e(p, ax("lt0", {unary(a)}));
    Proof d = kit::mp(ax("ltS", {unary(a), unary(b - 1)}), p);
    std::string l1 = labels_.next(), l2 = labels_.next();
    return Proof::or_e(d, l1, lt_absurd(a, b - 1, Proof::assume(l1, d.conclusion().lhs())), l2,
                       neq(a, b - 1, Proof::assume(l2, d.conclusion().rhs())));
  }

  // Case split on y < u(m): the goal from each y = u(i), i < m.
  template <class Case>
  Proof split(const Formula& goal, const Proof& lt, const Term& y, std::size_t m, Case&& on) {
    if (m == 0) return Proof::bot_e(goal, Proof::not_e(lt, ax("lt0", {y})));
    Proof d = kit::mp(ax("ltS", {y, unary(m - 1)}), lt);
    std::string l1 = labels_.next(), l2 = labels_.next();
    Proof below = split(goal, Proof::assume(l1, d.conclusion().lhs()), y, m - 1, on);
    Proof at = on(m - 1, Proof::assume(l2, d.conclusion().rhs()));
    return Proof::or_e(d, l1, below, l2, at);
  }

  const TheorySpec& base_;
  const ArithOptions& opt_;
  kit::Labels labels_;
  std::map<std::string, Formula> ax_;
  std::map<std::pair<std::size_t, std::size_t>, Proof> add_memo_, mul_memo_;
  Var next_var_ = 1;
};

}  // namespace

bool holds_in_N(const Formula& f, const std::map<Var, Code>& env, const ArithOptions& opt) {
  std::map<Var, Code> e = env;
  return Truth{opt}(f, e);
}

Proof prove_true_bounded(const Formula& phi, const TheorySpec& base, const ArithOptions& opt) {
  if (!phi.is_sentence()) throw OutsideFragment("not a sentence: " + print(phi));
  Prover p(base, opt);
  if (!p.truth(phi)) throw FalseSentence("false in the standard model: " + print(phi));
  return p.prove(phi);
}

Proof prove_evaluation(const Term& t, const TheorySpec& base, const ArithOptions& opt) {
  Prover p(base, opt);
  return p.eval(t).second;
}

}  // namespace iwb
