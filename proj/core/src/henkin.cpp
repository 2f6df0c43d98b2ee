#include "iwb/henkin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "iwb/coding.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using F = Formula;
using K = Formula::Kind;
using json = nlohmann::json;

Term V(Var v) { return Term::var(v); }

constexpr unsigned kMaxBinders = 3;

std::size_t var_len(Var v) { return 1 + dyadic(v).size(); }

// Sentences by exact serialized length and number of binders in scope.
class Universe {
public:
  explicit Universe(const Signature& sig) : sig_(sig) {}

  const std::vector<Formula>& of(std::size_t len, unsigned depth) {
    auto key = std::make_pair(len, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Formula> out;
    if (len == 1) out.push_back(F::bot());
    for (const auto& sym : sig_.symbols()) atoms(sym, len, depth, out);
    if (len >= 2)
      for (const auto& f : of(len - 1, depth)) out.push_back(F::neg(f));
    for (std::size_t l = 1; l + 2 <= len; ++l) {
      const auto& lhs = of(l, depth);
      const auto& rhs = of(len - 1 - l, depth);
      for (const auto& a : lhs)
        for (const auto& b : rhs) {
          out.push_back(F::conj(a, b));
          out.push_back(F::disj(a, b));
          out.push_back(F::imp(a, b));
        }
    }
    if (depth < kMaxBinders) {
      std::size_t head = 1 + var_len(depth);
      if (len > head)
        for (const auto& f : of(len - head, depth + 1)) {
          out.push_back(F::forall(depth, f));
          out.push_back(F::exists(depth, f));
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  void atoms(Symbol r, std::size_t len, unsigned depth, std::vector<Formula>& out) {
    int a = sig_.arity(r);
    std::size_t head = 1 + dyadic(sig_.index_of(r)).size();
    if (a > 0 && depth == 0) return;
    std::vector<Term> args(static_cast<std::size_t>(a), V(0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
      if (i == args.size()) {
        if (used == len) out.push_back(F::atom(r, args));
        return;
      }
      for (Var v = 0; v < depth; ++v) {
        if (used + var_len(v) > len) continue;
        args[i] = V(v);
        rec(i + 1, used + var_len(v));
      }
    };
    rec(0, head);
  }

  const Signature& sig_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<Formula>> memo_;
};

std::string fresh_prefix(const Signature& sig, std::string p) {
  auto clash = [&] {
    for (const auto& s : sig.symbols())
      if (s.name().rfind(p, 0) == 0) return true;
    return false;
  };
  while (clash()) p += p.back();
  return p;
}

Formula unique(const std::string& c) {
  return F::forall(0, F::forall(1, F::imp(F::atom(c, {V(0)}), F::imp(F::atom(c, {V(1)}), F::eq(V(0), V(1))))));
}

// ∃x0 (c0(x0) ∧ ∃x1 (c1(x1) ∧ ... R(x0, x1, ...)))
Formula about(const std::vector<std::string>& cs, const Formula& inner) {
  Formula f = inner;
  for (std::size_t i = cs.size(); i-- > 0;) {
    Var v = static_cast<Var>(i);
    f = F::exists(v, F::conj(F::atom(cs[i], {V(v)}), f));
  }
  return f;
}

Formula atom_about(Symbol r, const std::vector<std::string>& cs) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < cs.size(); ++i) args.push_back(V(static_cast<Var>(i)));
  return about(cs, F::atom(r, args));
}

Formula same_about(const std::string& a, const std::string& b) { return about({a, b}, F::eq(V(0), V(1))); }

// φ(c) for the witness c of ∃vφ.
Formula instance(const Witness& w) {
  Var v = w.sentence.bound_var();
  return F::exists(v, F::conj(F::atom(w.constant, {V(v)}), w.sentence.body()));
}

std::vector<Formula> witness_axioms(const Witness& w) {
  return {F::exists(0, F::atom(w.constant, {V(0)})), unique(w.constant), F::imp(w.sentence, instance(w))};
}

Formula naming(const std::vector<Witness>& ws) {
  std::vector<Formula> ds;
  for (const auto& w : ws) ds.push_back(F::atom(w.constant, {V(0)}));
  return F::forall(0, F::disj_all(ds));
}

}  // namespace

Code code_bound_for_length(std::size_t n) {
  Code a = static_cast<unsigned long>(syntax_alphabet().size());
  Code p;
  mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), n + 1);
  return (p - 1) / (a - 1) - 1;
}

std::vector<Formula> sentence_universe(const Signature& sig, const Code& b) {
  if (b < 0) return {};
  std::size_t longest = decode(b, syntax_alphabet()).size();
  Universe u(sig);
  std::vector<std::pair<Code, Formula>> all;
  for (std::size_t len = 1; len <= longest; ++len)
    for (const auto& f : u.of(len, 0)) {
      Code c = code_syntax(f, sig);
      if (c <= b) all.emplace_back(c, f);
    }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Formula> out;
  for (auto& [c, f] : all) out.push_back(std::move(f));
  return out;
}

WitnessExtension add_witnesses(const TheorySpec& V, const Code& b) {
  const Signature& base = V.signature();
  WitnessExtension ext;
  std::string prefix = fresh_prefix(base, "c");
  Signature sig = base;
  for (const auto& f : sentence_universe(base, b)) {
    if (!f.is(K::Exists)) continue;
    Witness w{f, code_syntax(f, base), prefix + std::to_string(ext.witnesses.size() + 1)};
    sig.add(w.constant, 1);
    ext.witnesses.push_back(std::move(w));
  }
  if (ext.witnesses.empty()) {
    ext.theory = V;
    return ext;
  }
  ext.theory = TheorySpec(V.name() + "+witnesses", sig);
  for (const auto& f : V.finite_axioms()) ext.theory.add_axiom(f);
  for (const auto& s : V.schemas()) ext.theory.add_schema(s);
  for (const auto& w : ext.witnesses)
    for (const auto& f : witness_axioms(w)) ext.theory.add_axiom(f);
  return ext;
}

// ------------------------------------------------------------ completion

namespace {

// Constants assigned to distinct elements so that every element is named;
// nullopt when no such choice exists. Kuhn's augmenting paths.
std::optional<std::vector<Elem>> cover(const std::vector<std::vector<Elem>>& candidates, std::size_t n) {
  std::vector<int> owner(n, -1);  // element -> constant
  std::function<bool(std::size_t, std::vector<bool>&)> try_constant = [&](std::size_t c, std::vector<bool>& seen) {
    for (Elem e : candidates[c]) {
      if (seen[e]) continue;
      seen[e] = true;
      if (owner[e] < 0 || try_constant(static_cast<std::size_t>(owner[e]), seen)) {
        owner[e] = static_cast<int>(c);
        return true;
      }
    }
    return false;
  };
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::vector<bool> seen(n, false);
    try_constant(c, seen);
  }
  std::vector<Elem> choice(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) choice[c] = candidates[c].front();
  for (Elem e = 0; e < n; ++e) {
    if (owner[e] < 0) return std::nullopt;
    choice[static_cast<std::size_t>(owner[e])] = e;
  }
  return choice;
}

}  // namespace

HenkinState henkin_complete(const TheorySpec& V, const Code& b, const SearchOptions& oracle) {
  if (!V.schemas().empty()) throw HenkinError("completion needs a finitely axiomatized theory");
  const Signature& sig = V.signature();
  std::vector<Formula> axioms;
  for (const auto& a : V.listed_axioms()) axioms.push_back(a.formula);
  SearchStats stats;
  std::optional<Structure> current = find_model(axioms, sig, oracle, &stats);
  if (!current)
    throw HenkinError("no model of " + V.name() + " with at most " + std::to_string(oracle.max_domain) + " elements" +
                      (stats.budget_hit ? " (search budget hit)" : "") + "; refusing to complete it");

  HenkinState s;
  s.base = V;
  s.bound = b;
  s.oracle = oracle;
  WitnessExtension ext = add_witnesses(V, b);
  s.extended = ext.theory;
  s.witnesses = ext.witnesses;
  const Signature& esig = s.extended.signature();
  auto decide = [&](const Formula& f, bool holds, std::string by, std::size_t size) {
    s.W.push_back(holds ? f : F::neg(f));
    s.transcript.push_back({print(f), code_syntax(f, esig), holds ? "accepted" : "negated", std::move(by), size});
  };

  std::vector<Formula> known = axioms;
  for (const auto& f : sentence_universe(sig, b)) {
    if (eval(*current, f)) {
      decide(f, true, "current model", current->size);
      known.push_back(f);
      continue;
    }
    known.push_back(f);
    SearchStats st;
    std::optional<Structure> m = find_model(known, sig, oracle, &st);
    known.pop_back();
    if (m) {
      current = std::move(m);
      decide(f, true, "search", current->size);
      known.push_back(f);
    } else if (st.budget_hit) {
      s.truncated = true;
      s.reason = "search budget hit deciding " + print(f);
      s.transcript.push_back({print(f), code_syntax(f, esig), "undecided", "search budget", 0});
      return s;
    } else {
      decide(f, false, "current model", current->size);
      known.push_back(F::neg(f));
    }
  }
  if (s.witnesses.empty()) return s;

  // Expand the current model by witnesses, naming every element if possible.
  const std::size_t n = current->size;
  std::vector<std::vector<Elem>> candidates;
  for (const auto& w : s.witnesses) {
    std::vector<Elem> ok;
    for (Elem e = 0; e < n; ++e)
      if (eval(*current, w.sentence.body(), {{w.sentence.bound_var(), e}})) ok.push_back(e);
    if (ok.empty())
      for (Elem e = 0; e < n; ++e) ok.push_back(e);
    candidates.push_back(std::move(ok));
  }
  std::optional<std::vector<Elem>> choice = cover(candidates, n);
  s.named = choice.has_value();
  if (!choice) {
    choice.emplace();
    for (const auto& c : candidates) choice->push_back(c.front());
  }
  Structure M = *current;
  M.sig = esig;
  for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
    M.tables[s.witnesses[i].constant];
    M.set(s.witnesses[i].constant, {(*choice)[i]});
  }
  for (const auto& w : s.witnesses)
    for (const auto& f : witness_axioms(w)) decide(f, eval(M, f), "witness axiom", n);
  for (const auto& w : s.witnesses) decide(instance(w), eval(M, instance(w)), "expansion", n);
  decide(naming(s.witnesses), s.named, "expansion", n);

  for (std::size_t i = 0; i < s.witnesses.size(); ++i)
    for (std::size_t k = i + 1; k < s.witnesses.size(); ++k) {
      Formula f = same_about(s.witnesses[i].constant, s.witnesses[k].constant);
      decide(f, eval(M, f), "current model", n);
    }
  // One constant per element: the first that names it.
  std::vector<std::string> reps;
  for (Elem e = 0; e < n; ++e)
    for (std::size_t i = 0; i < s.witnesses.size(); ++i)
      if ((*choice)[i] == e) {
        reps.push_back(s.witnesses[i].constant);
        break;
      }
  for (const auto& r : sig.symbols()) {
    if (r == Symbol::identity()) continue;
    std::size_t a = static_cast<std::size_t>(sig.arity(r));
    std::vector<std::size_t> idx(a, 0);
    while (true) {
      std::vector<std::string> cs;
      for (std::size_t i : idx) cs.push_back(reps[i]);
      Formula f = atom_about(r, cs);
      decide(f, eval(M, f), "current model", n);
      std::size_t p = 0;
      while (p < a && ++idx[p] == reps.size()) idx[p++] = 0;
      if (p == a) break;
    }
  }
  return s;
}

// ------------------------------------------------------------ term model

TermModel term_model(const HenkinState& s) {
  if (s.witnesses.empty()) throw HenkinError("no witness constants below the bound; nothing to build a term model from");
  std::set<std::string> in_w;
  for (const auto& f : s.W) in_w.insert(print(f));
  auto accepted = [&](const Formula& f) { return in_w.count(print(f)) != 0; };
  auto rejected = [&](const Formula& f) { return in_w.count(print(F::neg(f))) != 0; };

  const std::size_t k = s.witnesses.size();
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (accepted(same_about(s.witnesses[i].constant, s.witnesses[j].constant))) parent[root(j)] = root(i);

  TermModel t;
  t.partial = s.truncated;
  std::vector<Elem> cls(k);
  std::vector<std::size_t> rep;  // class -> its first constant
  std::map<std::size_t, Elem> by_root;
  for (std::size_t i = 0; i < k; ++i) {
    auto [it, fresh] = by_root.emplace(root(i), static_cast<Elem>(rep.size()));
    if (fresh) {
      rep.push_back(i);
      t.names.emplace_back();
    }
    cls[i] = it->second;
    t.names[cls[i]].push_back(s.witnesses[i].constant);
  }

  Structure& M = t.model;
  M.sig = s.extended.signature();
  M.size = rep.size();
  for (std::size_t i = 0; i < k; ++i) {
    M.tables[s.witnesses[i].constant];
    M.set(s.witnesses[i].constant, {cls[i]});
  }
  for (const auto& r : s.base.signature().symbols()) {
    if (r == Symbol::identity()) continue;
    M.tables[r.name()];
    std::size_t a = static_cast<std::size_t>(s.base.signature().arity(r));
    std::vector<Elem> idx(a, 0);
    while (true) {
      std::vector<std::string> cs;
      for (Elem e : idx) cs.push_back(s.witnesses[rep[e]].constant);
      Formula f = atom_about(r, cs);
      if (accepted(f))
        M.set(r.name(), idx);
      else if (!rejected(f))
        t.failures.push_back("undecided: " + print(f));
      std::size_t p = 0;
      while (p < a && ++idx[p] == M.size) idx[p++] = 0;
      if (p == a) break;
    }
  }
  for (const auto& f : s.W)
    if (!eval(M, f)) t.failures.push_back("false in the term model: " + print(f));
  for (const auto& f : s.extended.finite_axioms())
    if (!eval(M, f)) t.failures.push_back("axiom false in the term model: " + print(f));
  return t;
}

// ------------------------------------------------------------ certificate

namespace {

Formula E(Elem e, Var v) { return F::atom("E" + std::to_string(e), {V(v)}); }

std::vector<Formula> elements_of(Var v, std::size_t from, std::size_t n) {
  std::vector<Formula> out;
  for (std::size_t e = from; e < n; ++e) out.push_back(E(static_cast<Elem>(e), v));
  return out;
}

// F(R): the disjunction over the table of R of E_{t1}(x1) ∧ ... ∧ E_{tm}(xm).
std::vector<Formula> table_disjuncts(const Structure& N, Symbol r, const std::vector<Term>& args) {
  std::vector<Formula> ds;
  auto it = N.tables.find(r.name());
  if (it == N.tables.end()) return ds;
  for (const Tuple& t : it->second) {
    std::vector<Formula> cs;
    for (std::size_t i = 0; i < t.size(); ++i) cs.push_back(E(t[i], args[i].var_index()));
    ds.push_back(F::conj_all(cs));
  }
  return ds;
}

std::vector<Formula> tail(const std::vector<Formula>& fs, std::size_t i) { return {fs.begin() + static_cast<long>(i), fs.end()}; }

// Proves φ^k or ¬φ^k, whichever N makes true, from the axioms of U_N and
// assumptions E_e(v) for the free variables of φ.
class Tracer {
public:
  struct Slot {
    Elem e;
    Proof has;  // E_e(v)
  };
  struct Result {
    bool truth;
    Proof proof;
  };
  using Env = std::map<Var, Slot>;

  Tracer(const Structure& N, const TheorySpec& U, const Translation& k, Var first_free)
      : N_(N), U_(U), k_(k), n_(N.size), next_var_(first_free) {}

  Result prove(const Formula& f, Env& env) {
    switch (f.kind()) {
      case K::Bot: return {false, not_bot()};
      case K::Atom: return f.rel() == Symbol::identity() ? identity(f, env) : relation(f, env);
      case K::Not: {
        Result r = prove(f.lhs(), env);
        if (!r.truth) return {true, r.proof};
        Formula nA = tr(f);
        std::string l = label();
        return {false, Proof::not_i(nA, l, Proof::not_e(r.proof, Proof::assume(l, nA)))};
      }
      case K::And: {
        Formula T = tr(f);
        Result a = prove(f.lhs(), env);
        if (!a.truth) {
          std::string l = label();
          return {false, Proof::not_i(T, l, Proof::not_e(Proof::and_e1(Proof::assume(l, T)), a.proof))};
        }
        Result b = prove(f.rhs(), env);
        if (!b.truth) {
          std::string l = label();
          return {false, Proof::not_i(T, l, Proof::not_e(Proof::and_e2(Proof::assume(l, T)), b.proof))};
        }
        return {true, Proof::and_i(a.proof, b.proof)};
      }
      case K::Or: {
        Formula A = tr(f.lhs()), B = tr(f.rhs());
        Result a = prove(f.lhs(), env);
        if (a.truth) return {true, Proof::or_i1(a.proof, B)};
        Result b = prove(f.rhs(), env);
        if (b.truth) return {true, Proof::or_i2(A, b.proof)};
        std::string l = label(), l1 = label(), l2 = label();
        Formula T = F::disj(A, B);
        return {false, Proof::not_i(T, l,
                                    Proof::or_e(Proof::assume(l, T), l1, Proof::not_e(Proof::assume(l1, A), a.proof), l2,
                                                Proof::not_e(Proof::assume(l2, B), b.proof)))};
      }
      case K::Imp: {
        Formula A = tr(f.lhs()), B = tr(f.rhs());
        Result a = prove(f.lhs(), env);
        std::string l = label();
        if (!a.truth)
          return {true, Proof::imp_i(A, l, Proof::bot_e(B, Proof::not_e(Proof::assume(l, A), a.proof)))};
        Result b = prove(f.rhs(), env);
        if (b.truth) return {true, Proof::imp_i(A, l, b.proof)};
        Formula T = F::imp(A, B);
        return {false, Proof::not_i(T, l, Proof::not_e(Proof::imp_e(Proof::assume(l, T), a.proof), b.proof))};
      }
      case K::Forall: return forall(f, env);
      case K::Exists: return exists(f, env);
      default: throw HenkinError("bounded quantifier in a relational sentence: " + print(f));
    }
  }

private:
  Formula tr(const Formula& f) const { return translate_formula(k_, f); }
  std::string label() { return "u" + std::to_string(++next_label_); }
  Var fresh() { return next_var_++; }

  Proof ax(const Formula& f) const { return Proof::axiom(f, U_.code(f)); }
  Proof closure() const { return ax(F::forall(0, F::disj_all(elements_of(0, 0, n_)))); }
  Proof existence(Elem e) const { return ax(F::exists(0, E(e, 0))); }
  Proof distinct(Elem a, Elem b) const { return ax(F::forall(0, F::imp(E(a, 0), F::neg(E(b, 0))))); }
  Proof unique_ax(Elem e) const { return ax(unique("E" + std::to_string(e))); }

  Proof not_bot() {
    std::string l = label();
    return Proof::not_i(F::bot(), l, Proof::assume(l, F::bot()));
  }

  // ⊥ from E_a(v) and E_b(v), a ≠ b.
  Proof clash(Var v, Elem a, Proof pa, Elem b, Proof pb) const {
    if (a > b) {
      std::swap(a, b);
      std::swap(pa, pb);
    }
    return Proof::not_e(pb, Proof::imp_e(Proof::forall_e(distinct(a, b), V(v)), pa));
  }

  Assignment assignment(const Env& env) const {
    Assignment a;
    for (const auto& [v, s] : env) a[v] = s.e;
    return a;
  }

  // One branch per element of v, each proving the same formula.
  template <class Branch>
  Proof by_cases(Var v, Branch&& branch) {
    Proof d = Proof::forall_e(closure(), V(v));
    std::function<Proof(std::size_t, Proof)> cases = [&](std::size_t i, Proof disj) {
      Elem e = static_cast<Elem>(i);
      if (i + 1 == n_) return branch(e, disj);
      std::string l1 = label(), l2 = label();
      Proof left = branch(e, Proof::assume(l1, E(e, v)));
      Proof right = cases(i + 1, Proof::assume(l2, F::disj_all(elements_of(v, i + 1, n_))));
      return Proof::or_e(disj, l1, left, l2, right);
    };
    return cases(0, d);
  }

  Proof under(Var w, Elem e, Proof has, const Formula& body, Env& env) {
    env.insert_or_assign(w, Slot{e, std::move(has)});
    Proof p = prove(body, env).proof;
    env.erase(w);
    return p;
  }

  Result identity(const Formula& f, Env& env) {
    Var a = f.terms()[0].var_index(), b = f.terms()[1].var_index();
    if (a == b) return {true, Proof::refl(V(a))};
    const Slot& sa = env.at(a);
    const Slot& sb = env.at(b);
    if (sa.e == sb.e) {
      Proof u = Proof::forall_e(Proof::forall_e(unique_ax(sa.e), V(a)), V(b));
      return {true, Proof::imp_e(Proof::imp_e(u, sa.has), sb.has)};
    }
    std::string l = label();
    Var h = fresh();
    Proof moved = Proof::eq_subst(h, E(sa.e, h), Proof::assume(l, f), sa.has);
    return {false, Proof::not_i(f, l, clash(b, sa.e, moved, sb.e, sb.has))};
  }

  Result relation(const Formula& f, Env& env) {
    const auto& args = f.terms();
    for (const auto& t : args)
      if (!t.is_var()) throw HenkinError("function term in " + print(f));
    Tuple here;
    for (const auto& t : args) here.push_back(env.at(t.var_index()).e);
    std::vector<Formula> ds = table_disjuncts(N_, f.rel(), args);
    auto it = N_.tables.find(f.rel().name());
    const std::size_t m = ds.size();

    if (it != N_.tables.end() && it->second.count(here)) {
      std::size_t pos = static_cast<std::size_t>(std::distance(it->second.begin(), it->second.find(here)));
      std::function<Proof(std::size_t)> conj = [&](std::size_t i) -> Proof {
        if (args.empty()) return not_bot();
        const Proof& has = env.at(args[i].var_index()).has;
        return i + 1 == args.size() ? has : Proof::and_i(has, conj(i + 1));
      };
      Proof p = pos + 1 == m ? conj(0) : Proof::or_i1(conj(0), F::disj_all(tail(ds, pos + 1)));
      for (std::size_t i = pos; i-- > 0;) p = Proof::or_i2(ds[i], p);
      return {true, p};
    }

    // Every disjunct names some argument wrongly.
    auto kill = [&](std::size_t d, Proof conj) {
      const Tuple& t = *std::next(it->second.begin(), static_cast<long>(d));
      std::size_t q = 0;
      while (t[q] == here[q]) ++q;
      Proof part = conj;
      if (args.size() > 1) {
        for (std::size_t i = 0; i < q; ++i) part = Proof::and_e2(part);
        if (q + 1 < args.size()) part = Proof::and_e1(part);
      }
      const Slot& s = env.at(args[q].var_index());
      return clash(args[q].var_index(), t[q], part, s.e, s.has);
    };
    std::function<Proof(std::size_t, Proof)> refute = [&](std::size_t i, Proof disj) -> Proof {
      if (m == 0) return disj;
      if (i + 1 == m) return kill(i, disj);
      std::string l1 = label(), l2 = label();
      return Proof::or_e(disj, l1, kill(i, Proof::assume(l1, ds[i])), l2,
                         refute(i + 1, Proof::assume(l2, F::disj_all(tail(ds, i + 1)))));
    };
    Formula T = F::disj_all(ds);
    std::string l = label();
    return {false, Proof::not_i(T, l, refute(0, Proof::assume(l, T)))};
  }

  Result forall(const Formula& f, Env& env) {
    Formula T = tr(f);
    Var w = fresh();
    Formula body = f.body().substitute(f.bound_var(), V(w));
    Assignment a = assignment(env);
    for (Elem e = 0; e < n_; ++e) {
      a[w] = e;
      if (eval(N_, body, a)) continue;
      std::string l = label(), l2 = label();
      Proof q = under(w, e, Proof::assume(l2, E(e, w)), body, env);
      Proof inst = Proof::imp_e(Proof::forall_e(Proof::assume(l, T), V(w)), Proof::refl(V(w)));
      return {false, Proof::not_i(T, l, Proof::exists_e(existence(e), l2, w, Proof::not_e(inst, q)))};
    }
    Proof inner = by_cases(w, [&](Elem e, Proof has) { return under(w, e, std::move(has), body, env); });
    return {true, Proof::forall_i(T, w, Proof::imp_i(k_.delta_at(V(w)), label(), inner))};
  }

  Result exists(const Formula& f, Env& env) {
    Formula T = tr(f);
    Var w = fresh();
    Formula body = f.body().substitute(f.bound_var(), V(w));
    Assignment a = assignment(env);
    for (Elem e = 0; e < n_; ++e) {
      a[w] = e;
      if (!eval(N_, body, a)) continue;
      std::string l = label();
      Proof p = under(w, e, Proof::assume(l, E(e, w)), body, env);
      Proof inner = Proof::exists_i(T, V(w), Proof::and_i(Proof::refl(V(w)), p));
      return {true, Proof::exists_e(existence(e), l, w, inner)};
    }
    std::string l = label(), l3 = label();
    Formula inst = F::conj(k_.delta_at(V(w)), tr(body));
    Proof bot = by_cases(w, [&](Elem e, Proof has) {
      return Proof::not_e(Proof::and_e2(Proof::assume(l3, inst)), under(w, e, std::move(has), body, env));
    });
    return {false, Proof::not_i(T, l, Proof::exists_e(Proof::assume(l, T), l3, w, bot))};
  }

  const Structure& N_;
  const TheorySpec& U_;
  const Translation& k_;
  std::size_t n_;
  Var next_var_;
  std::size_t next_label_ = 0;
};

}  // namespace

namespace {

Var past_vars(const Formula& f) {
  switch (f.kind()) {
    case K::Atom: {
      Var m = 0;
      for (const auto& t : f.terms())
        if (t.is_var()) m = std::max(m, t.var_index() + 1);
      return m;
    }
    case K::Bot: return 0;
    case K::Not: return past_vars(f.lhs());
    case K::And:
    case K::Or:
    case K::Imp: return std::max(past_vars(f.lhs()), past_vars(f.rhs()));
    default: return std::max(f.bound_var() + 1, past_vars(f.body()));
  }
}

}  // namespace

InterpretationCertificate interpretation_from_model(const Structure& N, const TheorySpec& V) {
  if (!V.schemas().empty()) throw HenkinError("certificates from a model need a finitely axiomatized theory");
  if (N.tables.count("=")) throw HenkinError("the model must interpret identity as equality");
  if (N.size == 0) throw HenkinError("empty model");
  const Signature& vs = V.signature();
  std::vector<Axiom> axioms = V.listed_axioms();
  for (const auto& a : axioms)
    if (!eval(N, a.formula)) throw HenkinError("axiom false in the model: " + print(a.formula));

  const std::size_t n = N.size;
  Signature us("U_N");
  for (std::size_t e = 0; e < n; ++e) us.add("E" + std::to_string(e), 1);
  TheorySpec U("U_N", us);
  U.add_axiom(F::forall(0, F::disj_all(elements_of(0, 0, n))));
  for (std::size_t e = 0; e < n; ++e) U.add_axiom(F::exists(0, E(static_cast<Elem>(e), 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      U.add_axiom(F::forall(0, F::imp(E(static_cast<Elem>(a), 0), F::neg(E(static_cast<Elem>(b), 0)))));
  for (std::size_t e = 0; e < n; ++e) U.add_axiom(unique("E" + std::to_string(e)));

  Translation k;
  k.name = "model";
  k.source = vs;
  k.target = us;
  k.delta_var = 0;
  k.delta = F::eq(Term::var(0), Term::var(0));
  for (const auto& r : vs.symbols()) {
    if (r == Symbol::identity()) continue;
    RelImage im;
    std::vector<Term> args;
    for (int i = 0; i < vs.arity(r); ++i) {
      im.params.push_back(static_cast<Var>(i));
      args.push_back(Term::var(static_cast<Var>(i)));
    }
    im.body = F::disj_all(table_disjuncts(N, r, args));
    k.rel.emplace(r.name(), std::move(im));
  }
  k.validate();

  auto obligations = equality_obligations(vs);
  Var first = 0;
  for (const auto& a : axioms) first = std::max(first, past_vars(a.formula));
  for (const auto& [l, f] : obligations) first = std::max(first, past_vars(f));
  Tracer tracer(N, U, k, first);

  InterpretationCertificate c;
  c.k = k;
  c.V = V;
  c.U = U;
  for (const auto& a : axioms) {
    Tracer::Env env;
    c.axioms.emplace(a.code, tracer.prove(a.formula, env).proof);
    c.x = std::max(c.x, a.code);
  }
  for (const auto& [label, f] : obligations) {
    Tracer::Env env;
    Tracer::Result r = tracer.prove(f, env);
    if (r.truth) c.equality.emplace(label, r.proof);
  }
  return c;
}

HenkinRun henkin_pipeline(const TheorySpec& V, const Code& b, const SearchOptions& oracle) {
  HenkinRun run;
  run.state = henkin_complete(V, b, oracle);
  if (run.state.witnesses.empty()) return run;
  run.model = term_model(run.state);
  if (!run.model->ok()) return run;
  Structure N = run.model->model;
  N.sig = V.signature();
  for (const auto& w : run.state.witnesses) N.tables.erase(w.constant);
  run.certificate = interpretation_from_model(N, V);
  run.report = verify_certificate(*run.certificate, Notion::SA);
  return run;
}

// ------------------------------------------------------------ state files

json henkin_state_json(const HenkinState& s) {
  const Signature& es = s.extended.signature();
  json j;
  j["base"] = write_sexp(theory_sexp(s.base));
  j["bound"] = s.bound.get_str();
  j["oracle"] = {{"min_domain", s.oracle.min_domain}, {"max_domain", s.oracle.max_domain}, {"max_steps", s.oracle.max_steps}};
  j["witnesses"] = json::array();
  for (const auto& w : s.witnesses)
    j["witnesses"].push_back({{"sentence", print(w.sentence)}, {"code", w.code.get_str()}, {"constant", w.constant}});
  j["W"] = json::array();
  j["W_sentences"] = json::array();
  for (const auto& f : s.W) {
    j["W"].push_back(code_syntax(f, es).get_str());
    j["W_sentences"].push_back(print(f));
  }
  j["transcript"] = json::array();
  for (const auto& e : s.transcript)
    j["transcript"].push_back(
        {{"query", e.query}, {"code", e.code.get_str()}, {"answer", e.answer}, {"by", e.by}, {"size", e.size}});
  j["named"] = s.named;
  j["truncated"] = s.truncated;
  j["reason"] = s.reason;
  return j;
}

HenkinState henkin_state_from_json(const json& j) {
  HenkinState s;
  s.base = parse_theory(read_sexp(j.at("base").get<std::string>()));
  s.bound = Code(j.at("bound").get<std::string>());
  const json& o = j.at("oracle");
  s.oracle = {o.at("min_domain").get<std::size_t>(), o.at("max_domain").get<std::size_t>(), o.at("max_steps").get<std::size_t>()};
  WitnessExtension ext = add_witnesses(s.base, s.bound);
  s.extended = ext.theory;
  s.witnesses = ext.witnesses;
  const json& ws = j.at("witnesses");
  if (ws.size() != s.witnesses.size()) throw HenkinError("state file: witness list does not match the bound");
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i].at("constant").get<std::string>() != s.witnesses[i].constant ||
        Code(ws[i].at("code").get<std::string>()) != s.witnesses[i].code)
      throw HenkinError("state file: witness " + std::to_string(i + 1) + " does not match the bound");
  const Signature& es = s.extended.signature();
  const json& codes = j.at("W");
  const json& texts = j.at("W_sentences");
  if (codes.size() != texts.size()) throw HenkinError("state file: W and W_sentences differ in length");
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Formula f = read_formula(texts[i].get<std::string>(), &es);
    if (code_syntax(f, es) != Code(codes[i].get<std::string>()))
      throw HenkinError("state file: code of " + print(f) + " does not match");
    s.W.push_back(f);
  }
  for (const auto& e : j.at("transcript"))
    s.transcript.push_back({e.at("query").get<std::string>(), Code(e.at("code").get<std::string>()),
                            e.at("answer").get<std::string>(), e.at("by").get<std::string>(), e.at("size").get<std::size_t>()});
  s.named = j.at("named").get<bool>();
  s.truncated = j.at("truncated").get<bool>();
  s.reason = j.at("reason").get<std::string>();
  return s;
}

}  // namespace iwb
