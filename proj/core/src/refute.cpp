#include "iwb/refute.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "iwb/checker.hpp"

namespace iwb {

namespace {

using K = Formula::Kind;

constexpr Var kCanonBase = 1'000'000;

std::string key_of(const Formula& f) { return print(rename_bound(f, kCanonBase)); }

struct Fact {
  Formula formula;
  Proof proof;
  std::size_t weight;
};

struct Candidate {
  std::size_t weight;
  std::string key;
  std::size_t seq;
  Formula formula;
  Proof proof;
};

struct Later {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.key != b.key) return a.key > b.key;
    return a.seq > b.seq;
  }
};

struct Witness {
  Var var;
  std::string label;
  Proof ex;
};

enum class Need : std::uint8_t { NegOf, AntecedentOf, LeftNegOf, RightNegOf };

class Search {
public:
  Search(const TheorySpec& U, const Code& n, const RefuteBudget& b) : U_(U), n_(n), b_(b) {}

  RefuteResult run() {
    Var next = 0;
    auto axioms = U_.axioms_up_to(n_);
    for (const auto& a : axioms) next = std::max(next, a.formula.max_var_plus_one());
    generic_ = next;
    next_var_ = next + 1;
    terms_.push_back(Term::var(generic_));
    if (U_.signature().arithmetic()) terms_.push_back(Term::zero());
    for (const auto& a : axioms)
      if (rho(a.formula) <= n_) push(a.formula, Proof::axiom(a.formula, a.code), 1);

    RefuteResult res;
    while (!queue_.empty()) {
      if (facts_.size() >= b_.max_facts) break;
      Candidate c = queue_.top();
      queue_.pop();
      if (index_.count(c.key)) continue;
      if (c.formula.is(K::Bot)) {
        res.proof = close(c.proof);
        break;
      }
      settle(std::move(c));
    }
    res.facts = facts_.size();
    res.candidates = seq_;
    res.saturated = !res.proof && queue_.empty();
    return res;
  }

private:
  void push(const Formula& f, Proof p, std::size_t w) {
    if (w > b_.max_nodes) return;
    std::string k = key_of(f);
    if (index_.count(k)) return;
    queue_.push({w, std::move(k), seq_++, f, std::move(p)});
  }

  void settle(Candidate c) {
    std::size_t id = facts_.size();
    facts_.push_back({c.formula, c.proof, c.weight});
    index_.emplace(c.key, id);
    const Fact& f = facts_.back();
    const Formula phi = f.formula;
    const Proof p = f.proof;
    const std::size_t w = f.weight;

    switch (phi.kind()) {
      case K::And:
        push(phi.lhs(), Proof::and_e1(p), w + 1);
        push(phi.rhs(), Proof::and_e2(p), w + 1);
        break;
      case K::Forall:
        foralls_.push_back(id);
        for (const auto& t : terms_) push(phi.body().substitute(phi.bound_var(), t), Proof::forall_e(p, t), w + 1);
        break;
      case K::Exists: introduce_witness(id); break;
      case K::Not: wait(Need::NegOf, phi.lhs(), id); break;
      case K::Imp: wait(Need::AntecedentOf, phi.lhs(), id); break;
      case K::Or:
        wait(Need::LeftNegOf, Formula::neg(phi.lhs()), id);
        wait(Need::RightNegOf, Formula::neg(phi.rhs()), id);
        break;
      case K::BoundedAll:
      case K::BoundedEx:
      case K::SharpAll:
      case K::SharpEx: push(unfold_bounded(phi), Proof::unfold(p), w + 1); break;
      default: break;
    }

    auto it = waiting_.find(c.key);
    if (it != waiting_.end())
      for (auto [need, other] : it->second) fire(need, other, id);
  }

  void wait(Need need, const Formula& wanted, std::size_t id) {
    std::string k = key_of(wanted);
    waiting_[k].push_back({need, id});
    auto hit = index_.find(k);
    if (hit != index_.end()) fire(need, id, hit->second);
  }

  // `holder` waited for `arrived`.
  void fire(Need need, std::size_t holder, std::size_t arrived) {
    const Fact h = facts_[holder];
    const Fact a = facts_[arrived];
    std::size_t w = h.weight + a.weight + 1;
    switch (need) {
      case Need::NegOf: push(Formula::bot(), Proof::not_e(a.proof, h.proof), w); break;
      case Need::AntecedentOf: push(h.formula.rhs(), Proof::imp_e(h.proof, a.proof), w); break;
      case Need::LeftNegOf:
      case Need::RightNegOf: {
        bool left = need == Need::LeftNegOf;
        const Formula& gone = left ? h.formula.lhs() : h.formula.rhs();
        const Formula& kept = left ? h.formula.rhs() : h.formula.lhs();
        std::string l1 = "d" + std::to_string(++labels_);
        std::string l2 = "d" + std::to_string(++labels_);
        Proof dead = Proof::bot_e(kept, Proof::not_e(Proof::assume(l1, gone), a.proof));
        Proof live = Proof::assume(l2, kept);
        Proof out = left ? Proof::or_e(h.proof, l1, dead, l2, live) : Proof::or_e(h.proof, l2, live, l1, dead);
        push(kept, out, w + 3);
        break;
      }
    }
  }

  void introduce_witness(std::size_t id) {
    if (witnesses_.size() >= b_.max_witnesses) return;
    const Fact f = facts_[id];
    Var v = next_var_++;
    std::string label = "w" + std::to_string(witnesses_.size() + 1);
    witnesses_.push_back({v, label, f.proof});
    Term t = Term::var(v);
    Formula inst = f.formula.body().substitute(f.formula.bound_var(), t);
    push(inst, Proof::assume(label, inst), f.weight + 1);
    terms_.push_back(t);
    std::vector<std::size_t> fs = foralls_;
    for (std::size_t g : fs) {
      const Fact& a = facts_[g];
      push(a.formula.body().substitute(a.formula.bound_var(), t), Proof::forall_e(a.proof, t), a.weight + 1);
    }
  }

  // Discharges witness assumptions, latest first.
  Proof close(Proof p) const {
    for (;;) {
      CheckResult r = check_proof(p, U_);
      const Witness* last = nullptr;
      for (const auto& o : r.open)
        for (const auto& w : witnesses_)
          if (w.label == o.label && (!last || w.var > last->var)) last = &w;
      if (!last) break;
      p = Proof::exists_e(last->ex, last->label, last->var, p);
    }
    return p;
  }

  const TheorySpec& U_;
  Code n_;
  RefuteBudget b_;
  Var generic_ = 0;
  Var next_var_ = 0;
  std::vector<Term> terms_;
  std::vector<Fact> facts_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::vector<std::pair<Need, std::size_t>>> waiting_;
  std::vector<std::size_t> foralls_;
  std::vector<Witness> witnesses_;
  std::priority_queue<Candidate, std::vector<Candidate>, Later> queue_;
  std::size_t seq_ = 0;
  std::size_t labels_ = 0;
};

}  // namespace

RefuteResult search_refutation(const TheorySpec& U, const Code& n, const RefuteBudget& budget) {
  RefuteResult r = Search(U, n, budget).run();
  if (r.proof) {
    check_proof(*r.proof, U, true);
    RestrictedVerdict v = check_restricted(*r.proof, U, n);
    if (!v.ok) throw std::logic_error("refutation violates bound at " + v.path + ": " + v.reason);
  }
  return r;
}

std::string budget_tag(const RefuteBudget& b) {
  return "nodes<=" + std::to_string(b.max_nodes) + ",facts<=" + std::to_string(b.max_facts) +
         ",witnesses<=" + std::to_string(b.max_witnesses);
}

TheorySpec feferman_restrict(const TheorySpec& V, const RefuteBudget& budget) {
  TheorySpec out = V;
  out.set_name(V.name() + "'[" + budget_tag(budget) + "]");
  struct Cache {
    std::mutex m;
    std::map<Code, bool> refuted;
  };
  auto cache = std::make_shared<Cache>();
  auto base = std::make_shared<TheorySpec>(V);
  out.add_restriction("no refutation of code <= the axiom within " + budget_tag(budget),
                      [cache, base, budget](const Formula&, const Code& c) {
                        {
                          std::lock_guard lock(cache->m);
                          auto it = cache->refuted.find(c);
                          if (it != cache->refuted.end()) return !it->second;
                        }
                        bool found = search_refutation(*base, c, budget).found();
                        std::lock_guard lock(cache->m);
                        cache->refuted[c] = found;
                        return !found;
                      });
  return out;
}

}  // namespace iwb
