#include "iwb/syntax.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace iwb {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::vector<std::unique_ptr<std::string>> names;
  std::unordered_map<std::string, std::uint32_t> ids;

  SymbolTable() { intern("="); }

  std::uint32_t intern(std::string_view n) {
    std::string key(n);
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names.size());
    names.push_back(std::make_unique<std::string>(key));
    ids.emplace(std::move(key), id);
    return id;
  }
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  id_ = t.intern(name);
}

const std::string& Symbol::name() const {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  return *t.names[id_];
}

Symbol Symbol::identity() { return Symbol(); }

// ---------------------------------------------------------------- functions

int fn_arity(Fn f) {
  switch (f) {
    case Fn::Zero: return 0;
    case Fn::Succ:
    case Fn::Len:
    case Fn::Half: return 1;
    case Fn::Add:
    case Fn::Mul:
    case Fn::Smash: return 2;
  }
  return 0;
}

std::string_view fn_name(Fn f) {
  switch (f) {
    case Fn::Zero: return "0";
    case Fn::Succ: return "S";
    case Fn::Add: return "+";
    case Fn::Mul: return "*";
    case Fn::Smash: return "#";
    case Fn::Len: return "len";
    case Fn::Half: return "half";
  }
  return "?";
}

std::optional<Fn> fn_from_name(std::string_view n) {
  for (Fn f : {Fn::Zero, Fn::Succ, Fn::Add, Fn::Mul, Fn::Smash, Fn::Len, Fn::Half})
    if (fn_name(f) == n) return f;
  return std::nullopt;
}

// -------------------------------------------------------------------- terms

struct Term::Node {
  Kind kind;
  Var var = 0;
  Fn fn = Fn::Zero;
  std::vector<Term> args;
  std::size_t length = 1;
  Var var_bound = 0;  // max variable index + 1
};

Term Term::var(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->var = v;
  n->var_bound = v + 1;
  return Term(std::move(n));
}

Term Term::apply(Fn f, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != fn_arity(f))
    throw SyntaxError("function symbol " + std::string(fn_name(f)) + " applied to wrong number of arguments");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Apply;
  n->fn = f;
  for (const auto& a : args) {
    n->length += a.length();
    n->var_bound = std::max(n->var_bound, a.max_var_plus_one());
  }
  n->args = std::move(args);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
Var Term::var_index() const { return node_->var; }
Fn Term::fn() const { return node_->fn; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::size_t Term::length() const { return node_->length; }
Var Term::max_var_plus_one() const { return node_->var_bound; }

bool Term::closed() const {
  if (is_var()) return false;
  return std::all_of(args().begin(), args().end(), [](const Term& a) { return a.closed(); });
}

void Term::collect_vars(std::set<Var>& out) const {
  if (is_var()) {
    out.insert(var_index());
    return;
  }
  for (const auto& a : args()) a.collect_vars(out);
}

bool Term::mentions(Var v) const {
  if (is_var()) return var_index() == v;
  return std::any_of(args().begin(), args().end(), [v](const Term& a) { return a.mentions(v); });
}

Term Term::substitute(Var x, const Term& t) const {
  if (is_var()) return var_index() == x ? t : *this;
  if (!mentions(x)) return *this;
  std::vector<Term> as;
  as.reserve(args().size());
  for (const auto& a : args()) as.push_back(a.substitute(x, t));
  return apply(fn(), std::move(as));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_var()) return a.var_index() == b.var_index();
  return a.fn() == b.fn() && a.args() == b.args();
}

// ----------------------------------------------------------------- formulas

struct Formula::Node {
  Kind kind;
  Symbol rel;
  std::vector<Term> terms;
  std::vector<Formula> kids;
  Var var = 0;
  std::optional<Term> bound;
  std::size_t length = 1;
  Var var_bound = 0;
  bool functions = false;
  std::size_t depth = 0;
};

Formula Formula::atom(Symbol rel, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->rel = rel;
  for (const auto& t : args) {
    n->length += t.length();
    n->var_bound = std::max(n->var_bound, t.max_var_plus_one());
    n->functions = n->functions || !t.is_var();
  }
  n->terms = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::eq(Term a, Term b) { return atom(Symbol::identity(), {std::move(a), std::move(b)}); }

Formula Formula::bot() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    return Formula(std::move(n));
  }();
  return b;
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->length = 1 + f.length();
  n->var_bound = f.max_var_plus_one();
  n->functions = f.has_functions();
  n->depth = 1 + f.depth();
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->length = 1 + a.length() + b.length();
  n->var_bound = std::max(a.max_var_plus_one(), b.max_var_plus_one());
  n->functions = a.has_functions() || b.has_functions();
  n->depth = 1 + std::max(a.depth(), b.depth());
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  Formula f = conj(std::move(a), std::move(b));
  auto n = std::make_shared<Node>(*f.node_);
  n->kind = Kind::Or;
  return Formula(std::move(n));
}

Formula Formula::imp(Formula a, Formula b) {
  Formula f = conj(std::move(a), std::move(b));
  auto n = std::make_shared<Node>(*f.node_);
  n->kind = Kind::Imp;
  return Formula(std::move(n));
}

Formula Formula::iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::forall(Var x, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->var = x;
  n->length = 2 + body.length();
  n->var_bound = std::max(x + 1, body.max_var_plus_one());
  n->functions = body.has_functions();
  n->depth = 1 + body.depth();
  n->kids.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::exists(Var x, Formula body) {
  Formula f = forall(x, std::move(body));
  auto n = std::make_shared<Node>(*f.node_);
  n->kind = Kind::Exists;
  return Formula(std::move(n));
}

Formula Formula::bounded(Kind k, Var x, Term bound, Formula body) {
  if (k != Kind::BoundedAll && k != Kind::BoundedEx && k != Kind::SharpAll && k != Kind::SharpEx)
    throw SyntaxError("not a bounded quantifier kind");
  if (bound.mentions(x)) throw SyntaxError("bound term mentions the bound variable");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->var = x;
  n->length = 2 + bound.length() + body.length();
  n->var_bound = std::max({x + 1, body.max_var_plus_one(), bound.max_var_plus_one()});
  n->functions = true;
  n->depth = 1 + body.depth();
  n->bound = std::move(bound);
  n->kids.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return neg(bot());
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = disj(*it, acc);
  return acc;
}

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::is_quantifier() const { return kind() >= Kind::Forall; }
bool Formula::is_bounded_quantifier() const { return kind() >= Kind::BoundedAll; }
Symbol Formula::rel() const { return node_->rel; }
const std::vector<Term>& Formula::terms() const { return node_->terms; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
const Formula& Formula::body() const { return node_->kids.at(0); }
Var Formula::bound_var() const { return node_->var; }
const Term& Formula::bound() const { return *node_->bound; }
std::size_t Formula::length() const { return node_->length; }
Var Formula::max_var_plus_one() const { return node_->var_bound; }
bool Formula::has_functions() const { return node_->functions; }
std::size_t Formula::depth() const { return node_->depth; }

namespace {

void collect_free(const Formula& f, std::set<Var>& bound, std::set<Var>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      for (const auto& t : f.terms()) {
        std::set<Var> vs;
        t.collect_vars(vs);
        for (Var v : vs)
          if (!bound.count(v)) out.insert(v);
      }
      return;
    case K::Bot: return;
    case K::Not: collect_free(f.lhs(), bound, out); return;
    case K::And:
    case K::Or:
    case K::Imp:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    default: {
      if (f.is_bounded_quantifier()) {
        std::set<Var> vs;
        f.bound().collect_vars(vs);
        for (Var v : vs)
          if (!bound.count(v)) out.insert(v);
      }
      bool fresh = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
    }
  }
}

}  // namespace

std::set<Var> Formula::free_vars() const {
  std::set<Var> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::set<Var> free_vars(const Formula& f) { return f.free_vars(); }

bool Formula::is_free(Var v) const { return free_vars().count(v) != 0; }

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return Formula::neg(std::move(kids[0]));
    case K::And: return Formula::conj(std::move(kids[0]), std::move(kids[1]));
    case K::Or: return Formula::disj(std::move(kids[0]), std::move(kids[1]));
    case K::Imp: return Formula::imp(std::move(kids[0]), std::move(kids[1]));
    default: break;
  }
  throw SyntaxError("rebuild: not a connective");
}

Formula requantify(const Formula& f, Var x, std::optional<Term> bound, Formula body) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Forall: return Formula::forall(x, std::move(body));
    case K::Exists: return Formula::exists(x, std::move(body));
    default: return Formula::bounded(f.kind(), x, std::move(*bound), std::move(body));
  }
}

Term subst_term(const Term& u, const std::map<Var, Term>& s) {
  if (u.is_var()) {
    auto it = s.find(u.var_index());
    return it == s.end() ? u : it->second;
  }
  if (u.args().empty()) return u;
  std::vector<Term> as;
  as.reserve(u.args().size());
  for (const auto& a : u.args()) as.push_back(subst_term(a, s));
  return Term::apply(u.fn(), std::move(as));
}

Formula subst_map(const Formula& f, const std::map<Var, Term>& s, Var& fresh) {
  using K = Formula::Kind;
  if (s.empty()) return f;
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Term> ts;
      ts.reserve(f.terms().size());
      for (const auto& t : f.terms()) {
        ts.push_back(subst_term(t, s));
      }
      return Formula::atom(f.rel(), std::move(ts));
    }
    case K::Bot: return f;
    case K::Not:
    case K::And:
    case K::Or:
    case K::Imp: {
      std::vector<Formula> kids;
      kids.push_back(subst_map(f.lhs(), s, fresh));
      if (f.kind() != K::Not) kids.push_back(subst_map(f.rhs(), s, fresh));
      return rebuild(f, std::move(kids));
    }
    default: {
      std::optional<Term> bound;
      if (f.is_bounded_quantifier()) {
        bound = subst_term(f.bound(), s);
      }
      Var x = f.bound_var();
      std::map<Var, Term> inner;
      std::set<Var> body_free = f.body().free_vars();
      bool capture = false;
      for (const auto& [v, t] : s) {
        if (v == x || !body_free.count(v)) continue;
        inner.emplace(v, t);
        if (t.mentions(x)) capture = true;
      }
      if (inner.empty()) return requantify(f, x, bound, f.body());
      Formula body = f.body();
      if (capture) {
        Var z = fresh++;
        inner.emplace(x, Term::var(z));
        x = z;
      }
      return requantify(f, x, bound, subst_map(body, inner, fresh));
    }
  }
}

Var fresh_above(const Formula& f, const std::map<Var, Term>& s) {
  Var m = f.max_var_plus_one();
  for (const auto& [v, t] : s) m = std::max({m, v + 1, t.max_var_plus_one()});
  return m;
}

}  // namespace

Formula Formula::substitute(const std::map<Var, Term>& s) const {
  Var fresh = fresh_above(*this, s);
  return subst_map(*this, s, fresh);
}

Formula Formula::substitute(Var x, const Term& t) const {
  if (t.is_var() && t.var_index() == x) return *this;
  return substitute(std::map<Var, Term>{{x, t}});
}

void Formula::subformulas(std::vector<Formula>& out) const {
  out.push_back(*this);
  for (const auto& k : node_->kids) k.subformulas(out);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.length() != b.length()) return false;
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom: return a.rel() == b.rel() && a.terms() == b.terms();
    case K::Bot: return true;
    case K::Not: return a.lhs() == b.lhs();
    case K::And:
    case K::Or:
    case K::Imp: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default:
      if (a.bound_var() != b.bound_var()) return false;
      if (a.is_bounded_quantifier() && !(a.bound() == b.bound())) return false;
      return a.body() == b.body();
  }
}

// ------------------------------------------------------------ alpha equality

namespace {

using Env = std::vector<std::pair<Var, Var>>;

// Position of the innermost binder for `v` on the given side, or -1.
long lookup(const Env& env, Var v, bool left) {
  for (long i = static_cast<long>(env.size()) - 1; i >= 0; --i)
    if ((left ? env[i].first : env[i].second) == v) return i;
  return -1;
}

bool alpha_term(const Term& a, const Term& b, const Env& env) {
  if (a.kind() != b.kind()) return false;
  if (a.is_var()) {
    long ia = lookup(env, a.var_index(), true);
    long ib = lookup(env, b.var_index(), false);
    if (ia != ib) return false;
    return ia >= 0 || a.var_index() == b.var_index();
  }
  if (a.fn() != b.fn()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], env)) return false;
  return true;
}

bool alpha(const Formula& a, const Formula& b, Env& env) {
  using K = Formula::Kind;
  if (a.kind() != b.kind() || a.length() != b.length()) return false;
  switch (a.kind()) {
    case K::Atom:
      if (!(a.rel() == b.rel()) || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], b.terms()[i], env)) return false;
      return true;
    case K::Bot: return true;
    case K::Not: return alpha(a.lhs(), b.lhs(), env);
    case K::And:
    case K::Or:
    case K::Imp: return alpha(a.lhs(), b.lhs(), env) && alpha(a.rhs(), b.rhs(), env);
    default: {
      if (a.is_bounded_quantifier() && !alpha_term(a.bound(), b.bound(), env)) return false;
      env.emplace_back(a.bound_var(), b.bound_var());
      bool ok = alpha(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
  }
}

Formula rename_rec(const Formula& f, Var& next) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return f;
    case K::Not: return Formula::neg(rename_rec(f.lhs(), next));
    case K::And:
    case K::Or:
    case K::Imp: {
      Formula l = rename_rec(f.lhs(), next);
      Formula r = rename_rec(f.rhs(), next);
      return rebuild(f, {l, r});
    }
    default: {
      Var z = next++;
      Formula body = f.body().substitute(f.bound_var(), Term::var(z));
      body = rename_rec(body, next);
      std::optional<Term> bound;
      if (f.is_bounded_quantifier()) bound = f.bound();
      return requantify(f, z, bound, body);
    }
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  Env env;
  return alpha(a, b, env);
}

Formula rename_bound(const Formula& f, Var first_fresh) {
  Var next = std::max(first_fresh, f.max_var_plus_one());
  return rename_rec(f, next);
}

// ---------------------------------------------------------------- signature

Signature::Signature() { add(Symbol::identity(), 2); }

Signature::Signature(std::string name, bool arithmetic) : name_(std::move(name)), arithmetic_(arithmetic) {
  add(Symbol::identity(), 2);
}

void Signature::add(Symbol rel, int arity) {
  if (arity < 0) throw SyntaxError("negative arity for " + rel.name());
  auto [it, inserted] = arities_.emplace(rel.name(), arity);
  if (!inserted) {
    if (it->second != arity) throw SyntaxError("symbol " + rel.name() + " declared with two arities");
    return;
  }
  order_.push_back(rel);
}

int Signature::arity(Symbol rel) const {
  auto it = arities_.find(rel.name());
  if (it == arities_.end()) throw SyntaxError("unknown relation symbol " + rel.name());
  return it->second;
}

std::size_t Signature::index_of(Symbol rel) const {
  auto it = std::find(order_.begin(), order_.end(), rel);
  if (it == order_.end()) throw SyntaxError("unknown relation symbol " + rel.name());
  return static_cast<std::size_t>(it - order_.begin());
}

void Signature::check(const Term& t) const {
  if (t.is_var()) return;
  if (!arithmetic_) throw SyntaxError("function symbol " + std::string(fn_name(t.fn())) + " outside arithmetic signature");
  for (const auto& a : t.args()) check(a);
}

void Signature::check(const Formula& f) const {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      if (static_cast<std::size_t>(arity(f.rel())) != f.terms().size())
        throw SyntaxError("arity mismatch for " + f.rel().name());
      for (const auto& t : f.terms()) check(t);
      return;
    case K::Bot: return;
    case K::Not: check(f.lhs()); return;
    case K::And:
    case K::Or:
    case K::Imp:
      check(f.lhs());
      check(f.rhs());
      return;
    default:
      if (f.is_bounded_quantifier()) {
        if (!arithmetic_) throw SyntaxError("bounded quantifier outside arithmetic signature");
        check(f.bound());
      }
      check(f.body());
  }
}

Signature Signature::arithmetic_language() {
  Signature s("arith", true);
  s.add("<", 2);
  s.add("<=", 2);
  return s;
}

Signature Signature::relational_arithmetic() {
  Signature s("rel-arith");
  s.add("Z", 1);
  s.add("Sc", 2);
  s.add("Add", 3);
  s.add("Mul", 3);
  s.add("Le", 2);
  return s;
}

// ------------------------------------------------------- complexity measures

Complexity complexity(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return {0, 0};
    case K::Not: {
      auto c = complexity(f.lhs());
      return {c.pi, c.sigma};
    }
    case K::And:
    case K::Or: {
      auto a = complexity(f.lhs()), b = complexity(f.rhs());
      return {std::max(a.sigma, b.sigma), std::max(a.pi, b.pi)};
    }
    case K::Imp: {
      auto a = complexity(f.lhs()), b = complexity(f.rhs());
      return {std::max(a.pi, b.sigma), std::max(a.sigma, b.pi)};
    }
    case K::Exists: {
      unsigned s = std::max(1u, complexity(f.body()).sigma);
      return {s, s + 1};
    }
    case K::Forall: {
      unsigned p = std::max(1u, complexity(f.body()).pi);
      return {p + 1, p};
    }
    default: return complexity(f.body());
  }
}

unsigned rho(const Formula& f) {
  auto c = complexity(f);
  return std::min(c.sigma, c.pi);
}

// ------------------------------------------------------------ classification

namespace {

bool sharply_bounded_only(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return true;
    case K::Not: return sharply_bounded_only(f.lhs());
    case K::And:
    case K::Or:
    case K::Imp: return sharply_bounded_only(f.lhs()) && sharply_bounded_only(f.rhs());
    case K::SharpAll:
    case K::SharpEx: return sharply_bounded_only(f.body());
    default: return false;
  }
}

bool bounded_only(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return true;
    case K::Not: return bounded_only(f.lhs());
    case K::And:
    case K::Or:
    case K::Imp: return bounded_only(f.lhs()) && bounded_only(f.rhs());
    case K::Forall:
    case K::Exists: return false;
    default: return bounded_only(f.body());
  }
}

// Sigma^b_1 when positive, Pi^b_1 when negative.
bool sigma1b(const Formula& f, bool positive) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return true;
    case K::Not: return sigma1b(f.lhs(), !positive);
    case K::And:
    case K::Or: return sigma1b(f.lhs(), positive) && sigma1b(f.rhs(), positive);
    case K::Imp: return sigma1b(f.lhs(), !positive) && sigma1b(f.rhs(), positive);
    case K::SharpAll:
    case K::SharpEx: return sigma1b(f.body(), positive);
    case K::BoundedEx: return positive && sigma1b(f.body(), positive);
    case K::BoundedAll: return !positive && sigma1b(f.body(), positive);
    default: return false;
  }
}

const Formula* strip(const Formula& f, Formula::Kind q) {
  const Formula* cur = &f;
  while (cur->kind() == q) cur = &cur->body();
  return cur;
}

}  // namespace

bool in_class(const Formula& f, FormulaClass c) {
  using K = Formula::Kind;
  switch (c) {
    case FormulaClass::Delta0: return sharply_bounded_only(f);
    case FormulaClass::Sigma1b: return sigma1b(f, true);
    case FormulaClass::Pi1b: return sigma1b(f, false);
    case FormulaClass::AllPi1b: return sigma1b(*strip(f, K::Forall), false);
    case FormulaClass::Sigma1: return bounded_only(*strip(f, K::Exists));
    case FormulaClass::Pi1: return bounded_only(*strip(f, K::Forall));
    case FormulaClass::Unclassified: return true;
  }
  return false;
}

FormulaClass classify(const Formula& f) {
  for (auto c : {FormulaClass::Delta0, FormulaClass::Sigma1b, FormulaClass::Pi1b, FormulaClass::AllPi1b,
                 FormulaClass::Sigma1, FormulaClass::Pi1})
    if (in_class(f, c)) return c;
  return FormulaClass::Unclassified;
}

std::string_view class_name(FormulaClass c) {
  switch (c) {
    case FormulaClass::Delta0: return "Delta0";
    case FormulaClass::Sigma1b: return "Sigma1b";
    case FormulaClass::Pi1b: return "Pi1b";
    case FormulaClass::AllPi1b: return "AllPi1b";
    case FormulaClass::Sigma1: return "Sigma1";
    case FormulaClass::Pi1: return "Pi1";
    case FormulaClass::Unclassified: return "Unclassified";
  }
  return "?";
}

}  // namespace iwb
