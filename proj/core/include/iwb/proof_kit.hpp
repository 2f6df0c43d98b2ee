// Derived rules built from the primitive calculus.

#pragma once

#include <string>
#include <vector>

#include "iwb/proof.hpp"

namespace iwb::kit {

/// Smallest variable index not mentioned by any of the arguments.
Var fresh_var(std::initializer_list<Formula> fs, std::initializer_list<Term> ts = {});

/// s = t  |-  t = s
Proof symm(const Proof& eq);
/// r = s, s = t  |-  r = t
Proof trans(const Proof& rs, const Proof& st);
/// s = t  |-  ctx[hole:=s] = ctx[hole:=t]; `hole` must not occur in s or t.
Proof congruence(const Proof& eq, const Term& ctx, Var hole);
/// s = t, φ(s)  |-  φ(t): rewrites every occurrence of s in the conclusion
/// of `p` selected by the template `tmpl` (with hole variable `hole`).
Proof rewrite(const Proof& eq, const Formula& tmpl, Var hole, const Proof& p);

/// Instantiates leading universal quantifiers in order.
Proof inst(Proof p, const std::vector<Term>& ts);
/// Modus ponens.
inline Proof mp(Proof imp, Proof a) { return Proof::imp_e(std::move(imp), std::move(a)); }

/// Generates labels "h1", "h2", ... with a caller-chosen prefix.
class Labels {
public:
  explicit Labels(std::string prefix = "h") : prefix_(std::move(prefix)) {}
  std::string next() { return prefix_ + std::to_string(++n_); }

private:
  std::string prefix_;
  std::size_t n_ = 0;
};

}  // namespace iwb::kit
