// Proof checking, plain and restricted.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iwb/proof.hpp"
#include "iwb/theory.hpp"

namespace iwb {

class ProofError : public std::runtime_error {
public:
  ProofError(std::string path, const std::string& msg)
      : std::runtime_error("at node " + (path.empty() ? std::string("root") : path) + ": " + msg), path(std::move(path)) {}
  std::string path;
};

struct OpenAssumption {
  std::string label;
  Formula formula;
};

struct CheckResult {
  Formula conclusion;
  std::vector<OpenAssumption> open;  // sorted by label
};

/// Checks every node; throws ProofError naming the first bad node. Open
/// assumptions are returned, not rejected; pass `closed` to reject them.
CheckResult check_proof(const Proof& p, const TheorySpec& U, bool closed = false);

struct ProofStats {
  std::size_t nodes = 0;
  Code max_axiom_code = 0;
  unsigned max_rho = 0;
  std::string max_code_path;
  std::string max_rho_path;
};

ProofStats proof_stats(const Proof& p, const TheorySpec& U);

struct RestrictedVerdict {
  bool ok = true;
  std::string path;    // offending node, if any
  std::string reason;
  ProofStats stats;
};

/// Every cited axiom has code <= n and every formula in the proof has rho <= n.
/// Assumes `p` passes check_proof.
RestrictedVerdict check_restricted(const Proof& p, const TheorySpec& U, const Code& n);

}  // namespace iwb
