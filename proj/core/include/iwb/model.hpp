// Finite structures: evaluation, internal models of translations,
// isomorphism, and brute-force model search.
//
// The domain is {0, ..., size-1}. Identity is true equality unless the
// structure carries a table for "=". In an arithmetic signature the
// elements below `numbers` are the naturals 0..numbers-1; 0, S, +, *, len,
// half and # are computed there and are undefined when the result leaves
// that prefix or an argument is not a number. An atom with an undefined
// argument is false. < and <= follow the numeric order unless tabled.
//
// JSON form:
//   {"size": 4, "relations": {"P": [[0], [2]], "R": [[0, 1]]},
//    "signature": {"P": 1, "R": 2}, "arithmetic": false, "numbers": 4}

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "iwb/interp.hpp"
#include "iwb/syntax.hpp"
#include "iwb/theory.hpp"

namespace iwb {

class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Elem = std::size_t;
using Tuple = std::vector<Elem>;
using Assignment = std::map<Var, Elem>;

struct Structure {
  Signature sig;
  std::size_t size = 1;
  std::size_t numbers = 0;  // arithmetic prefix; 0 means all of the domain
  std::map<std::string, std::set<Tuple>> tables;

  bool holds(const std::string& rel, const Tuple& t) const;
  void set(const std::string& rel, Tuple t, bool value = true);
  std::size_t number_limit() const { return numbers ? std::min(numbers, size) : size; }

  /// Problems with the identity table, if any: not an equivalence, or not
  /// respected by some relation table.
  std::vector<std::string> identity_problems() const;
};

/// Tarskian truth; throws ModelError on missing assignments or foreign symbols.
bool eval(const Structure& M, const Formula& phi, const Assignment& a = {});
/// Value of a term, nullopt when undefined.
std::optional<Elem> eval_term(const Structure& M, const Term& t, const Assignment& a);

struct InternalModel {
  Structure model;                        // over the source signature
  std::vector<std::vector<Elem>> classes; // elements of M in each class
  std::vector<std::string> diagnosis;     // failures of the equality conditions
  bool sound() const { return diagnosis.empty(); }
};

/// Domain: delta-satisfiers modulo =^j (the equivalence it generates);
/// R holds of classes when F(R) holds of some representatives.
InternalModel internal_model(const Structure& M, const Translation& j);

/// A bijection witnessing A ~ B, if any (brute force).
std::optional<std::vector<Elem>> isomorphism(const Structure& A, const Structure& B);

struct SearchOptions {
  std::size_t min_domain = 1;
  std::size_t max_domain = 4;
  std::size_t max_steps = 2'000'000;  // partial-table extensions tried
};

struct SearchStats {
  std::size_t steps = 0;
  bool budget_hit = false;  // nothing found, but the search was cut short
};

/// A structure of size <= max_domain satisfying every sentence, or nullopt
/// (which is not an inconsistency verdict). Relational signatures only;
/// identity is true equality. Sizes are tried in increasing order.
std::optional<Structure> find_model(const std::vector<Formula>& axioms, const Signature& sig,
                                    const SearchOptions& opt = {}, SearchStats* stats = nullptr);
std::optional<Structure> find_model(const TheorySpec& V, const SearchOptions& opt = {}, SearchStats* stats = nullptr);

nlohmann::json structure_json(const Structure& M);
Structure structure_from_json(const nlohmann::json& j);
Structure read_structure(const std::string& path);

}  // namespace iwb
