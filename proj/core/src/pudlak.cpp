#include "iwb/pudlak.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "iwb/cut.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;
using F = Formula;

Term V(Var v) { return Term::var(v); }

// Relational rewriting with a shared supply of fresh variables.
struct Relational {
  Var next;

  Formula with_value(const Term& t, const std::function<Formula(Var)>& k) {
    if (t.is_var()) return k(t.var_index());
    Var w = next++;
    return F::exists(w, F::conj(graph(t, w), k(w)));
  }

  // t = v
  Formula graph(const Term& t, Var v) {
    if (t.is_var()) return F::eq(t, V(v));
    const auto& a = t.args();
    switch (t.fn()) {
      case Fn::Zero: return F::atom("Z", {V(v)});
      case Fn::Succ: return with_value(a[0], [&](Var p) { return F::atom("Sc", {V(p), V(v)}); });
      case Fn::Add:
      case Fn::Mul: {
        const char* r = t.fn() == Fn::Add ? "Add" : "Mul";
        return with_value(a[0], [&](Var p) {
          return with_value(a[1], [&](Var q) { return F::atom(r, {V(p), V(q), V(v)}); });
        });
      }
      default: throw PudlakError("no relational form for " + std::string(fn_name(t.fn())));
    }
  }

  Formula less(const Term& s, const Term& t, bool strict) {
    return with_value(s, [&](Var a) {
      return with_value(t, [&](Var b) {
        Formula le = F::atom("Le", {V(a), V(b)});
        return strict ? F::conj(le, F::neg(F::eq(V(a), V(b)))) : le;
      });
    });
  }

  Formula atom(const Formula& f) {
    const auto& ts = f.terms();
    const std::string& r = f.rel().name();
    if (ts.size() != 2) throw PudlakError("not an arithmetic atom: " + print(f));
    if (f.rel() == Symbol::identity()) {
      if (ts[1].is_var()) return graph(ts[0], ts[1].var_index());
      if (ts[0].is_var()) return graph(ts[1], ts[0].var_index());
      return with_value(ts[0], [&](Var a) { return graph(ts[1], a); });
    }
    if (r == "<") return less(ts[0], ts[1], true);
    if (r == "<=") return less(ts[0], ts[1], false);
    throw PudlakError("not an arithmetic atom: " + print(f));
  }

  Formula go(const Formula& f) {
    switch (f.kind()) {
      case K::Atom: return atom(f);
      case K::Bot: return f;
      case K::Not: return F::neg(go(f.lhs()));
      case K::And: return F::conj(go(f.lhs()), go(f.rhs()));
      case K::Or: return F::disj(go(f.lhs()), go(f.rhs()));
      case K::Imp: return F::imp(go(f.lhs()), go(f.rhs()));
      case K::Forall: return F::forall(f.bound_var(), go(f.body()));
      case K::Exists: return F::exists(f.bound_var(), go(f.body()));
      case K::BoundedAll:
      case K::BoundedEx: {
        Var v = next++;
        Formula body = go(f.body().substitute(f.bound_var(), V(v)));
        Formula guard = less(V(v), f.bound(), true);
        return f.is(K::BoundedAll) ? F::forall(v, F::imp(guard, body)) : F::exists(v, F::conj(guard, body));
      }
      default: throw PudlakError("no relational form for " + print(f));
    }
  }
};

void require_source(const Translation& j) {
  Signature want = Signature::relational_arithmetic();
  for (const auto& s : want.symbols())
    if (!j.source.has(s) || j.source.arity(s) != want.arity(s))
      throw PudlakError("translation " + j.name + " does not translate relational arithmetic (missing " + s.name() + ")");
  if (!j.target.arithmetic()) throw PudlakError("target of " + j.name + " is not arithmetical");
}

const Var kX = 0, kY = 1, kSigma = 2;

}  // namespace

Signature with_sequence_kit(Signature host, const SequenceKit& kit) {
  auto add = [&](const std::string& name, int arity) {
    if (!host.has(Symbol(name))) host.add(name, arity);
    else if (host.arity(Symbol(name)) != arity)
      throw PudlakError("sequence symbol " + name + " has arity " + std::to_string(host.arity(Symbol(name))));
  };
  add(kit.length, 2);
  add(kit.entry, 3);
  return host;
}

Formula relationalize(const Formula& phi) {
  Relational r{phi.max_var_plus_one()};
  return r.go(phi);
}

Formula source_image(const Translation& j, const Formula& phi) { return translate_formula(j, relationalize(phi)); }

Formula PudlakArtifacts::same(const Term& a, const Term& b) const { return j.image(Symbol::identity(), {a, b}); }

namespace {

struct ClauseBuilder {
  const Translation& j;
  const SequenceKit& kit;
  Var next = 3;

  Var fresh() { return next++; }
  Formula at(const Term& s, const Term& i, Var a) const { return F::atom(kit.entry, {s, i, V(a)}); }
  Formula src(const Formula& phi) const { return source_image(j, phi); }
  // ∃a (At(σ, i, a) ∧ k(a))
  Formula entry(const Term& i, const std::function<Formula(Var)>& k) {
    Var a = fresh();
    return F::exists(a, F::conj(at(V(kSigma), i, a), k(a)));
  }
};

}  // namespace

PudlakArtifacts build_pudlak(const Translation& j, const SequenceKit& kit) {
  require_source(j);
  PudlakArtifacts p;
  p.j = j;
  p.kit = kit;
  p.host = with_sequence_kit(j.target, kit);
  ClauseBuilder b{j, kit};
  const Term x = V(kX), y = V(kY), s = V(kSigma), zero = Term::zero();
  std::vector<Clause> cs;
  cs.emplace_back("length", F::atom(kit.length, {s, Term::succ(x)}));
  cs.emplace_back("anchor-0", b.entry(zero, [&](Var a) { return b.src(F::eq(V(a), zero)); }));
  cs.emplace_back("anchor-y", b.entry(x, [&](Var a) { return b.src(F::eq(V(a), y)); }));
  {
    Var i = b.fresh(), a = b.fresh();
    cs.emplace_back("domain", F::bounded(K::BoundedAll, i, Term::succ(x),
                                         F::forall(a, F::imp(b.at(s, V(i), a), j.delta_at(V(a))))));
  }
  {
    Var i = b.fresh();
    Formula body = b.entry(V(i), [&](Var a) {
      return b.entry(Term::succ(V(i)), [&](Var c) { return b.src(F::eq(V(c), Term::add(V(a), Term::succ(zero)))); });
    });
    cs.emplace_back("successor", F::bounded(K::BoundedAll, i, x, body));
  }
  for (Fn op : {Fn::Add, Fn::Mul}) {
    Var k = b.fresh(), l = b.fresh();
    Term kl = Term::apply(op, {V(k), V(l)});
    Formula law = b.entry(V(k), [&](Var a) {
      return b.entry(V(l), [&](Var c) {
        return b.entry(kl, [&](Var d) { return b.src(F::eq(Term::apply(op, {V(a), V(c)}), V(d))); });
      });
    });
    Formula body = F::imp(F::atom("<=", {kl, x}), law);
    cs.emplace_back(op == Fn::Add ? "addition" : "multiplication",
                    F::bounded(K::BoundedAll, k, Term::succ(x), F::bounded(K::BoundedAll, l, Term::succ(x), body)));
  }
  {
    Var a = b.fresh(), i = b.fresh();
    Formula hit = F::bounded(K::BoundedEx, i, Term::succ(x), b.entry(V(i), [&](Var c) { return b.src(F::eq(V(c), V(a))); }));
    cs.emplace_back("initial-segment",
                    F::forall(a, F::imp(j.delta_at(V(a)), F::imp(b.src(F::atom("<=", {V(a), y})), hit))));
  }
  return assemble_pudlak(std::move(p), std::move(cs));
}

PudlakArtifacts build_pudlak_relative(const Translation& j, const Formula& I, const SequenceKit& kit) {
  auto fv = I.free_vars();
  if (fv.size() != 1) throw PudlakError("the cut formula needs exactly one free variable");
  PudlakArtifacts p = build_pudlak(j, kit);
  Var next = 3;
  for (const auto& [name, f] : p.clauses) next = std::max(next, f.max_var_plus_one());
  Var i = next++, a = next++;
  Formula inI = source_image(j, I.substitute(*fv.begin(), V(a)));
  Formula confine = F::bounded(K::BoundedAll, i, V(kX),
                               F::forall(a, F::imp(F::atom(kit.entry, {V(kSigma), V(i), V(a)}), inI)));
  std::vector<Clause> cs = p.clauses;
  cs.emplace_back("confinement", confine);
  p.confined_to = I;
  return assemble_pudlak(std::move(p), std::move(cs));
}

PudlakArtifacts assemble_pudlak(PudlakArtifacts p, std::vector<Clause> clauses) {
  p.clauses = std::move(clauses);
  std::vector<Formula> parts;
  for (const auto& [name, f] : p.clauses) parts.push_back(f);
  p.goodsequence = F::conj_all(parts);
  for (const auto& f : parts) p.host.check(f);
  Var next = std::max<Var>(p.goodsequence.max_var_plus_one(), 3);
  Var s2 = next++, y2 = next++, x2 = next++;
  Formula other = p.goodsequence.substitute({{kSigma, V(s2)}, {kY, V(y2)}});
  p.H = F::conj(F::exists(kSigma, p.goodsequence),
                F::forall(s2, F::forall(y2, F::imp(other, p.same(V(kY), V(y2))))));
  p.Jprime = F::bounded(K::BoundedAll, x2, Term::succ(V(kX)), F::exists(kY, p.H.substitute(kX, V(x2))));
  p.J = close_cut(p.Jprime);
  return p;
}

// ------------------------------------------------------------ finite models

Structure sequence_model(const Signature& host, std::size_t n, const std::vector<std::vector<Elem>>& codes,
                         const SequenceKit& kit) {
  Structure M;
  M.sig = with_sequence_kit(host, kit);
  M.size = n;
  M.numbers = n;
  M.tables[kit.length];
  M.tables[kit.entry];
  for (Elem s = 0; s < std::min(n, codes.size()); ++s) {
    const auto& seq = codes[s];
    if (seq.size() >= n) throw PudlakError("sequence length " + std::to_string(seq.size()) + " is not an element");
    M.set(kit.length, {s, seq.size()});
    for (Elem i = 0; i < seq.size(); ++i) {
      if (seq[i] >= n) throw PudlakError("sequence entry " + std::to_string(seq[i]) + " is not an element");
      M.set(kit.entry, {s, i, seq[i]});
    }
  }
  return M;
}

std::vector<std::vector<Elem>> canonical_codes(std::size_t n, const std::function<std::size_t(std::size_t)>& h) {
  std::vector<std::vector<Elem>> out;
  std::size_t distractors = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Elem> seq;
    bool fits = true;
    for (std::size_t i = 0; i < s && fits; ++i) {
      std::size_t v = h(i);
      fits = v < n;
      seq.push_back(v);
    }
    if (!fits) {
      std::size_t len = 1 + distractors % 3;
      seq.clear();
      for (std::size_t i = 0; i < len; ++i) seq.push_back(std::min(h(i), n - 1));
      seq.back() = (seq.back() + 1 + distractors / 3) % n;
      ++distractors;
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::optional<Elem> PudlakTable::h(Elem x) const {
  if (x >= images.size() || images[x].empty()) return std::nullopt;
  return images[x].front();
}

namespace {

// Index of the first clause that fails, or the clause count.
std::size_t first_failure(const Structure& M, const PudlakArtifacts& P, const Assignment& a) {
  for (std::size_t c = 0; c < P.clauses.size(); ++c)
    if (!eval(M, P.clauses[c].second, a)) return c;
  return P.clauses.size();
}

std::set<Elem> closed_extension(const Structure& M, std::size_t below) {
  Structure N = M;
  const std::string proxy = "Jprime.";
  N.sig.add(proxy, 1);
  N.tables[proxy];
  for (Elem e = 0; e < below; ++e) N.set(proxy, {e});
  Formula J = close_cut(F::atom(proxy, {V(0)}));
  std::set<Elem> out;
  for (Elem e = 0; e < N.size; ++e)
    if (eval(N, J, {{0, e}})) out.insert(e);
  return out;
}

}  // namespace

PudlakTable compute_h(const Structure& M, const PudlakArtifacts& P, bool with_cut) {
  const std::size_t n = M.size;
  PudlakTable t;
  t.good.resize(n);
  t.images.resize(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem s = 0; s < n; ++s)
      for (Elem y = 0; y < n; ++y)
        if (first_failure(M, P, {{kX, x}, {kY, y}, {kSigma, s}}) == P.clauses.size()) t.good[x].emplace_back(s, y);
  Formula same = P.same(V(kX), V(kY));
  for (Elem x = 0; x < n; ++x) {
    std::set<Elem> ys;
    for (const auto& [s, y] : t.good[x]) ys.insert(y);
    for (Elem y : ys) {
      bool unique = std::all_of(ys.begin(), ys.end(), [&](Elem y2) { return eval(M, same, {{kX, y}, {kY, y2}}); });
      if (unique) t.images[x].push_back(y);
    }
  }
  while (t.jprime < n && !t.images[t.jprime].empty()) ++t.jprime;
  if (with_cut) t.J = closed_extension(M, t.jprime);
  return t;
}

std::vector<std::string> failed_everywhere(const Structure& M, const PudlakArtifacts& P, Elem x) {
  std::vector<bool> always(P.clauses.size(), true);
  for (Elem s = 0; s < M.size; ++s)
    for (Elem y = 0; y < M.size; ++y) {
      Assignment a{{kX, x}, {kY, y}, {kSigma, s}};
      for (std::size_t c = 0; c < P.clauses.size(); ++c)
        if (always[c] && eval(M, P.clauses[c].second, a)) always[c] = false;
    }
  std::vector<std::string> out;
  for (std::size_t c = 0; c < P.clauses.size(); ++c)
    if (always[c]) out.push_back(P.clauses[c].first);
  return out;
}

std::string AgreementReport::text() const {
  std::string out = std::to_string(formulas) + " formulas, " + std::to_string(checked) + " checks, " +
                    std::to_string(skipped) + " skipped: " + (ok() ? "agree" : std::to_string(problems.size()) + " problems") +
                    "\n";
  for (const auto& p : problems) out += "  " + p + "\n";
  return out;
}

// ------------------------------------------------------------ test families

namespace {

std::vector<Term> scope_terms(const std::vector<Var>& scope) {
  std::vector<Term> out;
  for (Var v : scope) out.push_back(V(v));
  out.push_back(Term::zero());
  for (Var v : scope) out.push_back(Term::succ(V(v)));
  for (std::size_t i = 0; i < scope.size(); ++i)
    for (std::size_t k = i; k < scope.size(); ++k) out.push_back(Term::add(V(scope[i]), V(scope[k])));
  for (std::size_t i = 0; i < scope.size(); ++i)
    for (std::size_t k = i; k < scope.size(); ++k) out.push_back(Term::mul(V(scope[i]), V(scope[k])));
  return out;
}

bool mentions(const Formula& f, std::optional<Var> v) { return !v || f.is_free(*v); }

std::vector<Formula> level(const std::vector<Var>& scope, unsigned d, std::optional<Var> must) {
  std::vector<Formula> out;
  if (d == 0) {
    for (const Term& t : scope_terms(scope))
      for (Var v : scope)
        for (const char* op : {"=", "<"}) {
          Formula a = F::atom(op, {t, V(v)});
          if (mentions(a, must)) out.push_back(a);
        }
    return out;
  }
  std::vector<Formula> prev = level(scope, d - 1, must);
  const Formula partners[] = {F::eq(V(0), V(1)), F::atom("<", {V(0), V(1)})};
  out = prev;
  for (const Formula& f : prev) {
    out.push_back(F::neg(f));
    for (const Formula& c : partners) {
      out.push_back(F::conj(f, c));
      out.push_back(F::disj(f, c));
      out.push_back(F::imp(f, c));
    }
  }
  if (scope.size() < 4) {
    Var v = static_cast<Var>(scope.size());
    std::vector<Var> inner = scope;
    inner.push_back(v);
    std::vector<Formula> bodies = level(inner, d - 1, v);
    for (Var b : scope)
      for (K k : {K::BoundedAll, K::BoundedEx})
        for (const Formula& body : bodies) {
          Formula q = F::bounded(k, v, V(b), body);
          if (mentions(q, must)) out.push_back(q);
        }
  }
  return out;
}

std::optional<std::uint64_t> nat_term(const Term& t, const std::map<Var, std::uint64_t>& a, std::uint64_t limit) {
  std::uint64_t r = 0;
  if (t.is_var()) {
    auto it = a.find(t.var_index());
    if (it == a.end()) throw PudlakError("unassigned variable in " + print(t));
    r = it->second;
  } else {
    const auto& xs = t.args();
    std::vector<std::uint64_t> v;
    for (const auto& s : xs) {
      auto sv = nat_term(s, a, limit);
      if (!sv) return std::nullopt;
      v.push_back(*sv);
    }
    switch (t.fn()) {
      case Fn::Zero: r = 0; break;
      case Fn::Succ: r = v[0] + 1; break;
      case Fn::Add: r = v[0] + v[1]; break;
      case Fn::Mul: r = v[0] * v[1]; break;
      default: throw PudlakError("unsupported function in " + print(t));
    }
  }
  if (r > limit) return std::nullopt;
  return r;
}

}  // namespace

std::vector<Formula> delta0_formulas(unsigned depth) { return level({0, 1}, depth, std::nullopt); }

std::vector<Term> small_terms(std::size_t max_size) {
  std::vector<std::vector<Term>> by(max_size + 1);
  if (max_size == 0) return {};
  by[1] = {V(0), V(1), Term::zero()};
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const Term& t : by[s - 1]) by[s].push_back(Term::succ(t));
    for (std::size_t l = 1; l + 1 < s; ++l)
      for (Fn op : {Fn::Add, Fn::Mul})
        for (const Term& a : by[l])
          for (const Term& b : by[s - 1 - l]) by[s].push_back(Term::apply(op, {a, b}));
  }
  std::vector<Term> out;
  for (auto& v : by) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::optional<bool> eval_natural(const Formula& phi, const std::map<Var, std::uint64_t>& a, std::uint64_t limit) {
  switch (phi.kind()) {
    case K::Atom: {
      const auto& ts = phi.terms();
      if (ts.size() != 2) throw PudlakError("not an arithmetic atom: " + print(phi));
      auto l = nat_term(ts[0], a, limit), r = nat_term(ts[1], a, limit);
      if (!l || !r) return std::nullopt;
      const std::string& op = phi.rel().name();
      if (phi.rel() == Symbol::identity()) return *l == *r;
      if (op == "<") return *l < *r;
      if (op == "<=") return *l <= *r;
      throw PudlakError("not an arithmetic atom: " + print(phi));
    }
    case K::Bot: return false;
    case K::Not: {
      auto v = eval_natural(phi.lhs(), a, limit);
      if (!v) return std::nullopt;
      return !*v;
    }
    case K::And:
    case K::Or:
    case K::Imp: {
      auto l = eval_natural(phi.lhs(), a, limit), r = eval_natural(phi.rhs(), a, limit);
      if (!l || !r) return std::nullopt;
      if (phi.is(K::And)) return *l && *r;
      if (phi.is(K::Or)) return *l || *r;
      return !*l || *r;
    }
    case K::BoundedAll:
    case K::BoundedEx: {
      auto b = nat_term(phi.bound(), a, limit);
      if (!b) return std::nullopt;
      bool all = phi.is(K::BoundedAll), result = all;
      std::map<Var, std::uint64_t> inner = a;
      for (std::uint64_t v = 0; v < *b; ++v) {
        inner[phi.bound_var()] = v;
        auto r = eval_natural(phi.body(), inner, limit);
        if (!r) return std::nullopt;
        if (*r != all) result = !all;
      }
      return result;
    }
    default: throw PudlakError("not a bounded formula: " + print(phi));
  }
}

// ------------------------------------------------------------ agreement

namespace {

constexpr std::size_t kShownProblems = 40;

// Runs job(i) for i < n on all cores; problems come back in index order.
template <class Job>
void parallel(std::size_t n, AgreementReport& rep, Job job) {
  std::vector<AgreementReport> parts(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) job(i, parts[i]);
  };
  std::size_t k = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::size_t extra = 0;
  for (auto& p : parts) {
    rep.checked += p.checked;
    rep.skipped += p.skipped;
    for (auto& s : p.problems) {
      if (rep.problems.size() < kShownProblems) rep.problems.push_back(std::move(s));
      else ++extra;
    }
  }
  if (extra) rep.problems.push_back("... and " + std::to_string(extra) + " more");
}

std::string assignment_text(const std::map<Var, std::uint64_t>& a) {
  std::string out;
  for (const auto& [v, n] : a) out += (out.empty() ? "" : ", ") + VarNames::name(v) + "=" + std::to_string(n);
  return out;
}

// Every assignment of `vars` into 0..limit-1.
template <class Fn>
void assignments(const std::vector<Var>& vars, std::uint64_t limit, Fn fn) {
  std::map<Var, std::uint64_t> a;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) return fn(a);
    for (std::uint64_t v = 0; v < limit; ++v) {
      a[vars[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

// Shared preamble: J′(0) and functionality of H.
bool preamble(const Structure& M, const PudlakArtifacts& P, const PudlakTable& t, AgreementReport& rep) {
  if (t.jprime == 0) {
    std::string names;
    for (const auto& c : failed_everywhere(M, P, 0)) names += (names.empty() ? "" : ", ") + c;
    rep.problems.push_back("J'(0) fails; clauses no candidate meets at x=0: " + (names.empty() ? "none" : names));
    return false;
  }
  Formula same = P.same(V(kX), V(kY));
  for (Elem x = 0; x < t.images.size(); ++x)
    for (Elem a : t.images[x])
      for (Elem b : t.images[x])
        if (a < b && !eval(M, same, {{kX, a}, {kY, b}}))
          rep.problems.push_back("H is not functional at x=" + std::to_string(x) + ": images " + std::to_string(a) +
                                 " and " + std::to_string(b) + " are not =j");
  return true;
}

Assignment at_images(const PudlakTable& t, const std::map<Var, std::uint64_t>& a) {
  Assignment out;
  for (const auto& [v, n] : a) out[v] = *t.h(static_cast<Elem>(n));
  return out;
}

std::vector<Var> vars_of(const std::set<Var>& s) { return {s.begin(), s.end()}; }

}  // namespace

AgreementReport check_delta0_agreement(const Structure& M, const PudlakArtifacts& P, unsigned depth,
                                       const PudlakTable* table) {
  PudlakTable own;
  if (!table) own = compute_h(M, P, false), table = &own;
  const PudlakTable& t = *table;
  AgreementReport rep;
  if (!preamble(M, P, t, rep)) return rep;
  std::vector<Formula> fs = delta0_formulas(depth);
  rep.formulas = fs.size();
  const std::uint64_t top = t.jprime - 1;
  parallel(fs.size(), rep, [&](std::size_t i, AgreementReport& out) {
    const Formula& phi = fs[i];
    Formula image = source_image(P.j, phi);
    assignments(vars_of(phi.free_vars()), t.jprime, [&](const std::map<Var, std::uint64_t>& a) {
      auto truth = eval_natural(phi, a, top);
      if (!truth) return ++out.skipped, void();
      ++out.checked;
      if (eval(M, image, at_images(t, a)) != *truth)
        out.problems.push_back(print(phi) + " at " + assignment_text(a) + ": " + (*truth ? "true" : "false") +
                               " in the naturals, " + (*truth ? "false" : "true") + " at the images");
    });
  });
  return rep;
}

AgreementReport check_term_law(const Structure& M, const PudlakArtifacts& P, std::size_t max_size,
                               const PudlakTable* table) {
  PudlakTable own;
  if (!table) own = compute_h(M, P, false), table = &own;
  const PudlakTable& t = *table;
  AgreementReport rep;
  if (!preamble(M, P, t, rep)) return rep;
  std::vector<Term> ts = small_terms(max_size);
  rep.formulas = ts.size();
  const Var r = 2;
  const std::uint64_t top = t.jprime - 1;
  parallel(ts.size(), rep, [&](std::size_t i, AgreementReport& out) {
    Formula eq = F::eq(ts[i], V(r));
    Formula image = source_image(P.j, eq);
    std::set<Var> vs;
    ts[i].collect_vars(vs);
    vs.insert(r);
    assignments(vars_of(vs), t.jprime, [&](const std::map<Var, std::uint64_t>& a) {
      auto truth = eval_natural(eq, a, top);
      if (!truth) return ++out.skipped, void();
      ++out.checked;
      if (eval(M, image, at_images(t, a)) != *truth)
        out.problems.push_back("term " + print(ts[i]) + " at " + assignment_text(a) + ": " +
                               (*truth ? "equal" : "different") + " in the naturals, not so at the images");
    });
  });
  return rep;
}

AgreementReport check_confinement(const Structure& M, const PudlakArtifacts& P, const PudlakTable* table) {
  if (!P.confined_to) throw PudlakError("artifacts have no confinement clause");
  PudlakTable own;
  if (!table) own = compute_h(M, P, false), table = &own;
  const PudlakTable& t = *table;
  AgreementReport rep;
  rep.formulas = 1;
  if (!preamble(M, P, t, rep)) return rep;
  Var v = *P.confined_to->free_vars().begin();
  Formula image = source_image(P.j, *P.confined_to);
  for (Elem x = 0; x + 1 < t.jprime; ++x) {
    ++rep.checked;
    for (Elem y : t.images[x])
      if (!eval(M, image, {{v, y}}))
        rep.problems.push_back("h(" + std::to_string(x) + ") = " + std::to_string(y) + " is outside I");
  }
  return rep;
}

}  // namespace iwb
