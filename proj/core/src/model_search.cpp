#include <algorithm>

#include "iwb/model.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;

enum class T3 : std::uint8_t { F, T, U };

T3 t_not(T3 a) { return a == T3::U ? T3::U : (a == T3::T ? T3::F : T3::T); }
T3 t_and(T3 a, T3 b) {
  if (a == T3::F || b == T3::F) return T3::F;
  return a == T3::T && b == T3::T ? T3::T : T3::U;
}
T3 t_or(T3 a, T3 b) { return t_not(t_and(t_not(a), t_not(b))); }

// Relation tables with unknown cells, indexed densely per symbol.
class Partial {
public:
  // Only the symbols in `used` get cells; the others stay empty.
  Partial(const Signature& sig, const std::set<std::string>& used, std::size_t n) : n_(n) {
    for (const auto& r : sig.symbols()) {
      if (r == Symbol::identity() || !used.count(r.name())) continue;
      std::size_t m = static_cast<std::size_t>(sig.arity(r));
      std::size_t cells = 1;
      for (std::size_t i = 0; i < m; ++i) cells *= n;
      offset_[r.name()] = total_;
      arity_[r.name()] = m;
      names_.push_back(r.name());
      total_ += cells;
    }
    cell_.assign(total_, T3::U);
  }

  std::size_t total() const { return total_; }
  void set(std::size_t i, T3 v) { cell_[i] = v; }

  T3 get(const std::string& r, const Tuple& t) const {
    std::size_t i = 0;
    for (Elem e : t) i = i * n_ + e;
    return cell_[offset_.at(r) + i];
  }

  Structure to_structure(const Signature& sig) const {
    Structure M;
    M.sig = sig;
    M.size = n_;
    for (const auto& r : sig.symbols())
      if (!(r == Symbol::identity())) M.tables[r.name()];
    for (const auto& r : names_) {
      std::size_t m = arity_.at(r), base = offset_.at(r), cells = 1;
      for (std::size_t i = 0; i < m; ++i) cells *= n_;
      M.tables[r];
      for (std::size_t i = 0; i < cells; ++i) {
        if (cell_[base + i] != T3::T) continue;
        Tuple t(m);
        std::size_t v = i;
        for (std::size_t k = m; k-- > 0;) t[k] = v % n_, v /= n_;
        M.tables[r].insert(t);
      }
    }
    return M;
  }

  T3 eval(const Formula& f, std::vector<Elem>& env) const {
    switch (f.kind()) {
      case K::Atom: {
        Tuple t;
        for (const auto& s : f.terms()) t.push_back(env.at(s.var_index()));
        if (f.rel() == Symbol::identity()) return t[0] == t[1] ? T3::T : T3::F;
        return get(f.rel().name(), t);
      }
      case K::Bot: return T3::F;
      case K::Not: return t_not(eval(f.lhs(), env));
      case K::And: {
        T3 a = eval(f.lhs(), env);
        return a == T3::F ? a : t_and(a, eval(f.rhs(), env));
      }
      case K::Or: {
        T3 a = eval(f.lhs(), env);
        return a == T3::T ? a : t_or(a, eval(f.rhs(), env));
      }
      case K::Imp: {
        T3 a = eval(f.lhs(), env);
        return a == T3::F ? T3::T : t_or(t_not(a), eval(f.rhs(), env));
      }
      case K::Forall:
      case K::Exists: {
        bool all = f.is(K::Forall);
        Var x = f.bound_var();
        Elem saved = env[x];
        T3 acc = all ? T3::T : T3::F;
        for (Elem e = 0; e < n_; ++e) {
          env[x] = e;
          T3 v = eval(f.body(), env);
          acc = all ? t_and(acc, v) : t_or(acc, v);
          if (acc == (all ? T3::F : T3::T)) break;
        }
        env[x] = saved;
        return acc;
      }
      default: throw ModelError("model search over a bounded quantifier");
    }
  }

private:
  std::size_t n_;
  std::size_t total_ = 0;
  std::vector<T3> cell_;
  std::map<std::string, std::size_t> offset_;
  std::map<std::string, std::size_t> arity_;
  std::vector<std::string> names_;
};

class Search {
public:
  Search(const std::vector<Formula>& axioms, std::size_t n, std::size_t width, std::size_t& steps, std::size_t max_steps,
         const Signature& sig, const std::set<std::string>& used)
      : ax_(axioms), P_(sig, used, n), env_(width, 0), steps_(steps), max_steps_(max_steps) {}

  bool run(std::vector<std::size_t> pending, std::size_t cell) {
    if (++steps_ > max_steps_) {
      hit_ = true;
      return false;
    }
    std::vector<std::size_t> still;
    for (std::size_t i : pending) {
      T3 v = P_.eval(ax_[i], env_);
      if (v == T3::F) return false;
      if (v == T3::U) still.push_back(i);
    }
    if (still.empty() || cell == P_.total()) {
      if (!still.empty()) return false;
      for (std::size_t c = cell; c < P_.total(); ++c) P_.set(c, T3::F);
      return true;
    }
    for (T3 v : {T3::F, T3::T}) {
      P_.set(cell, v);
      if (run(still, cell + 1)) return true;
      if (hit_) return false;
    }
    P_.set(cell, T3::U);
    return false;
  }

  const Partial& partial() const { return P_; }
  bool hit() const { return hit_; }

private:
  const std::vector<Formula>& ax_;
  Partial P_;
  std::vector<Elem> env_;
  std::size_t& steps_;
  std::size_t max_steps_;
  bool hit_ = false;
};

void collect_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.is(K::Atom)) {
    out.insert(f.rel().name());
    return;
  }
  if (f.is(K::Bot)) return;
  if (f.is_quantifier()) {
    collect_symbols(f.body(), out);
    return;
  }
  collect_symbols(f.lhs(), out);
  if (!f.is(K::Not)) collect_symbols(f.rhs(), out);
}

}  // namespace

std::optional<Structure> find_model(const std::vector<Formula>& axioms, const Signature& sig, const SearchOptions& opt,
                                    SearchStats* stats) {
  if (sig.arithmetic()) throw ModelError("model search is for relational signatures");
  Var width = 1;
  std::set<std::string> used;
  for (const auto& f : axioms) {
    collect_symbols(f, used);
    if (!f.is_sentence()) throw ModelError("model search over an open formula " + print(f));
    if (f.has_functions()) throw ModelError("model search over a formula with function symbols");
    sig.check(f);
    width = std::max(width, f.max_var_plus_one());
  }
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  std::vector<std::size_t> all(axioms.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t n = std::max<std::size_t>(1, opt.min_domain); n <= opt.max_domain; ++n) {
    Search s(axioms, n, width, st.steps, opt.max_steps, sig, used);
    if (s.run(all, 0)) {
      Structure M = s.partial().to_structure(sig);
      for (const auto& f : axioms)
        if (!eval(M, f)) throw std::logic_error("model search returned a non-model for " + print(f));
      return M;
    }
    if (s.hit()) {
      st.budget_hit = true;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Structure> find_model(const TheorySpec& V, const SearchOptions& opt, SearchStats* stats) {
  std::vector<Formula> axioms;
  for (const auto& a : V.listed_axioms()) axioms.push_back(a.formula);
  return find_model(axioms, V.signature(), opt, stats);
}

}  // namespace iwb
