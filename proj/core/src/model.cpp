#include "iwb/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <nlohmann/json.hpp>

#include "iwb/sexpr.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

using json = nlohmann::json;

bool Structure::holds(const std::string& rel, const Tuple& t) const {
  auto it = tables.find(rel);
  return it != tables.end() && it->second.count(t);
}

void Structure::set(const std::string& rel, Tuple t, bool value) {
  if (value) tables[rel].insert(std::move(t));
  else if (auto it = tables.find(rel); it != tables.end()) it->second.erase(t);
}

std::vector<std::string> Structure::identity_problems() const {
  std::vector<std::string> out;
  auto it = tables.find("=");
  if (it == tables.end()) return out;
  auto eq = [&](Elem a, Elem b) { return it->second.count({a, b}) != 0; };
  for (Elem a = 0; a < size; ++a) {
    if (!eq(a, a)) out.push_back("identity not reflexive at " + std::to_string(a));
    for (Elem b = 0; b < size; ++b) {
      if (eq(a, b) && !eq(b, a)) out.push_back("identity not symmetric at " + std::to_string(a) + "," + std::to_string(b));
      for (Elem c = 0; c < size; ++c)
        if (eq(a, b) && eq(b, c) && !eq(a, c))
          out.push_back("identity not transitive at " + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c));
    }
  }
  for (const auto& [rel, rows] : tables) {
    if (rel == "=") continue;
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        for (Elem b = 0; b < size; ++b) {
          if (!eq(row[i], b)) continue;
          Tuple moved = row;
          moved[i] = b;
          if (!rows.count(moved)) {
            out.push_back("relation " + rel + " does not respect identity at position " + std::to_string(i + 1));
            goto next_rel;
          }
        }
  next_rel:;
  }
  return out;
}

namespace {

using K = Formula::Kind;

std::size_t bits(std::size_t v) {
  std::size_t n = 0;
  while (v) ++n, v >>= 1;
  return n;
}

class Evaluator {
public:
  explicit Evaluator(const Structure& M) : M_(M), lim_(M.number_limit()) {}

  std::optional<Elem> term(const Term& t, const Assignment& a) const {
    if (t.is_var()) {
      auto it = a.find(t.var_index());
      if (it == a.end()) throw ModelError("no value for variable " + VarNames::name(t.var_index()));
      return it->second;
    }
    if (!M_.sig.arithmetic()) throw ModelError("function symbol " + std::string(fn_name(t.fn())) + " in a relational structure");
    std::vector<std::size_t> v;
    for (const auto& s : t.args()) {
      auto x = term(s, a);
      if (!x || *x >= lim_) return std::nullopt;
      v.push_back(*x);
    }
    std::size_t r = 0;
    switch (t.fn()) {
      case Fn::Zero: r = 0; break;
      case Fn::Succ: r = v[0] + 1; break;
      case Fn::Add: r = v[0] + v[1]; break;
      case Fn::Mul: r = v[0] * v[1]; break;
      case Fn::Len: r = bits(v[0]); break;
      case Fn::Half: r = v[0] / 2; break;
      case Fn::Smash: {
        std::size_t e = bits(v[0]) * bits(v[1]);
        if (e >= 40) return std::nullopt;
        r = std::size_t{1} << e;
        break;
      }
    }
    if (r >= lim_) return std::nullopt;
    return r;
  }

  bool atom(const Formula& f, const Assignment& a) const {
    const std::string& r = f.rel().name();
    if (r != "=" && !M_.sig.has(f.rel())) throw ModelError("relation symbol " + r + " not in the structure's signature");
    Tuple t;
    for (const auto& s : f.terms()) {
      auto v = term(s, a);
      if (!v) return false;
      t.push_back(*v);
    }
    auto tab = M_.tables.find(r);
    if (tab != M_.tables.end()) return tab->second.count(t) != 0;
    if (r == "=") return t[0] == t[1];
    if (M_.sig.arithmetic() && (r == "<" || r == "<=")) {
      if (t[0] >= lim_ || t[1] >= lim_) return false;
      return r == "<" ? t[0] < t[1] : t[0] <= t[1];
    }
    return false;
  }

  bool run(const Formula& f, Assignment& a) const {
    switch (f.kind()) {
      case K::Atom: return atom(f, a);
      case K::Bot: return false;
      case K::Not: return !run(f.lhs(), a);
      case K::And: return run(f.lhs(), a) && run(f.rhs(), a);
      case K::Or: return run(f.lhs(), a) || run(f.rhs(), a);
      case K::Imp: return !run(f.lhs(), a) || run(f.rhs(), a);
      default: break;
    }
    bool all = f.is(K::Forall) || f.is(K::BoundedAll) || f.is(K::SharpAll);
    std::size_t hi = M_.size;
    if (f.is_bounded_quantifier()) {
      auto b = term(f.bound(), a);
      if (!b || *b >= lim_) return all;
      hi = (f.is(K::SharpAll) || f.is(K::SharpEx)) ? bits(*b) : *b;
      hi = std::min(hi, lim_);
    }
    Var x = f.bound_var();
    auto saved = a.find(x) != a.end() ? std::optional<Elem>(a[x]) : std::nullopt;
    bool result = all;
    for (Elem e = 0; e < hi; ++e) {
      a[x] = e;
      if (run(f.body(), a) != all) {
        result = !all;
        break;
      }
    }
    if (saved) a[x] = *saved;
    else a.erase(x);
    return result;
  }

private:
  const Structure& M_;
  std::size_t lim_;
};

}  // namespace

bool eval(const Structure& M, const Formula& phi, const Assignment& a) {
  Assignment env = a;
  return Evaluator(M).run(phi, env);
}

std::optional<Elem> eval_term(const Structure& M, const Term& t, const Assignment& a) { return Evaluator(M).term(t, a); }

InternalModel internal_model(const Structure& M, const Translation& j) {
  InternalModel out;
  Var x = j.delta_var;
  std::vector<Elem> sat;
  for (Elem e = 0; e < M.size; ++e)
    if (eval(M, j.delta, {{x, e}})) sat.push_back(e);
  Term tx = Term::var(0), ty = Term::var(1);
  Formula eqf = j.image(Symbol::identity(), {tx, ty});
  auto eq = [&](Elem a, Elem b) { return eval(M, eqf, {{0, a}, {1, b}}); };

  std::vector<Elem> parent(M.size);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Elem(Elem)> find = [&](Elem e) { return parent[e] == e ? e : parent[e] = find(parent[e]); };
  bool refl = true, sym = true, trans = true;
  for (Elem a : sat) {
    if (!eq(a, a)) refl = false;
    for (Elem b : sat) {
      if (!eq(a, b)) continue;
      parent[find(a)] = find(b);
      if (!eq(b, a)) sym = false;
      for (Elem c : sat)
        if (eq(b, c) && !eq(a, c)) trans = false;
    }
  }
  if (!refl) out.diagnosis.push_back("=^j is not reflexive on the domain");
  if (!sym) out.diagnosis.push_back("=^j is not symmetric on the domain");
  if (!trans) out.diagnosis.push_back("=^j is not transitive on the domain");

  std::map<Elem, std::size_t> cls;
  for (Elem e : sat) {
    Elem r = find(e);
    if (!cls.count(r)) {
      cls.emplace(r, out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[cls[r]].push_back(e);
  }
  auto class_of = [&](Elem e) { return cls.at(find(e)); };

  Structure& N = out.model;
  N.sig = j.source;
  N.size = out.classes.size();
  for (const auto& r : j.source.symbols()) {
    if (r == Symbol::identity()) continue;
    std::size_t m = static_cast<std::size_t>(j.source.arity(r));
    std::vector<Term> args;
    for (std::size_t i = 0; i < m; ++i) args.push_back(Term::var(static_cast<Var>(i)));
    Formula body = j.image(r, args);
    std::map<Tuple, std::pair<bool, bool>> seen;  // class tuple -> (some true, some false)
    Tuple idx(m, 0);
    bool done = sat.empty() && m > 0;
    while (!done) {
      Assignment a;
      Tuple reps, classes;
      for (std::size_t i = 0; i < m; ++i) {
        a[static_cast<Var>(i)] = sat[idx[i]];
        classes.push_back(class_of(sat[idx[i]]));
      }
      bool v = eval(M, body, a);
      auto& s = seen[classes];
      (v ? s.first : s.second) = true;
      std::size_t i = 0;
      for (; i < m; ++i) {
        if (++idx[i] < sat.size()) break;
        idx[i] = 0;
      }
      done = i == m;
    }
    bool dependent = false;
    for (const auto& [classes, tf] : seen) {
      if (tf.first) N.set(r.name(), classes);
      if (tf.first && tf.second) dependent = true;
    }
    if (dependent) out.diagnosis.push_back("image of " + r.name() + " depends on the choice of representatives");
  }
  return out;
}

std::optional<std::vector<Elem>> isomorphism(const Structure& A, const Structure& B) {
  if (A.size != B.size) return std::nullopt;
  std::set<std::string> names;
  for (const auto& [r, rows] : A.tables)
    if (!rows.empty()) names.insert(r);
  for (const auto& [r, rows] : B.tables)
    if (!rows.empty()) names.insert(r);
  for (const auto& r : names) {
    auto ia = A.tables.find(r), ib = B.tables.find(r);
    std::size_t na = ia == A.tables.end() ? 0 : ia->second.size();
    std::size_t nb = ib == B.tables.end() ? 0 : ib->second.size();
    if (na != nb) return std::nullopt;
  }
  std::vector<Elem> perm(A.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& r : names) {
      auto ia = A.tables.find(r);
      if (ia == A.tables.end()) continue;
      for (const auto& row : ia->second) {
        Tuple img;
        for (Elem e : row) img.push_back(perm[e]);
        if (!B.holds(r, img)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

json structure_json(const Structure& M) {
  json j;
  j["size"] = M.size;
  if (M.sig.arithmetic()) {
    j["arithmetic"] = true;
    j["numbers"] = M.number_limit();
  }
  json sig = json::object();
  for (const auto& s : M.sig.symbols())
    if (!(s == Symbol::identity())) sig[s.name()] = M.sig.arity(s);
  j["signature"] = sig;
  json rel = json::object();
  for (const auto& [r, rows] : M.tables) {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(row);
    rel[r] = arr;
  }
  j["relations"] = rel;
  return j;
}

Structure structure_from_json(const json& j) {
  Structure M;
  bool arith = j.value("arithmetic", false);
  M.sig = arith ? Signature::arithmetic_language() : Signature("structure");
  const json& d = j.at("size");
  M.size = d.get<std::size_t>();
  M.numbers = j.value("numbers", std::size_t{0});
  if (j.contains("signature"))
    for (const auto& [name, ar] : j.at("signature").items()) M.sig.add(name, ar.get<int>());
  if (j.contains("relations"))
    for (const auto& [name, rows] : j.at("relations").items()) {
      for (const auto& row : rows) {
        Tuple t = row.get<Tuple>();
        for (Elem e : t)
          if (e >= M.size) throw ModelError("element " + std::to_string(e) + " outside the domain in " + name);
        if (!M.sig.has(Symbol(name))) M.sig.add(name, static_cast<int>(t.size()));
        if (M.sig.arity(Symbol(name)) != static_cast<int>(t.size()))
          throw ModelError("tuple of wrong length for " + name);
        M.tables[name].insert(std::move(t));
      }
      M.tables[name];
    }
  return M;
}

Structure read_structure(const std::string& path) { return structure_from_json(json::parse(read_file(path))); }

}  // namespace iwb
