// interp-workbench: one entry point over the library, a workspace of named
// artifacts, and JSON reports.
//
// Exit status: 0 positive verdict, 1 negative verdict, 2 usage or parse error.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iwb/certificate.hpp"
#include "iwb/henkin.hpp"
#include "iwb/model.hpp"
#include "iwb/refute.hpp"
#include "iwb/theory.hpp"

namespace wb {

namespace fs = std::filesystem;
using json = nlohmann::json;

enum class Verdict { Certified, Rejected, Exhausted, Agreement, Disagreement, Found, NoneFound };

std::string verdict_name(Verdict v);
bool positive(Verdict v);

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, sha256 of the file or text
  Verdict verdict = Verdict::Certified;
  std::string witness;  // for disagreement
  std::vector<std::string> diagnostics;
  json data = json::object();
  double seconds = 0;

  json to_json() const;
  std::string text() const;
};

struct Config {
  iwb::RefuteBudget refute;
  iwb::SearchOptions oracle;
  double membership_constant = 60;

  json to_json() const;
  static Config from_json(const json& j);
};

// Artifacts by kind under the root: theories/*.theory, translations/*.sexp,
// proofs/*.proof, structures/*.json, certificates/NAME/, henkin/*.json.
class Workspace {
public:
  explicit Workspace(fs::path root);

  const fs::path& root() const { return root_; }
  const Config& config() const { return config_; }
  Config& config() { return config_; }

  /// A path to an existing file, else the named artifact of that kind.
  fs::path resolve(const std::string& kind, const std::string& name_or_path) const;
  fs::path slot(const std::string& kind, const std::string& name) const;
  std::vector<std::string> names(const std::string& kind) const;

  iwb::TheorySpec theory(const std::string& ref, Report& r) const;
  iwb::Translation translation(const std::string& ref, Report& r) const;
  iwb::Proof proof(const std::string& ref, const iwb::Signature* sig, Report& r) const;
  iwb::Structure structure(const std::string& ref, Report& r) const;
  iwb::InterpretationCertificate certificate(const std::string& ref, Report& r) const;
  iwb::HenkinState henkin_state(const std::string& ref, Report& r) const;

  void save_text(const std::string& kind, const std::string& name, const std::string& text) const;

private:
  std::string read_input(const std::string& kind, const std::string& ref, Report& r) const;

  fs::path root_;
  Config config_;
};

/// Holds root/.lock for the lifetime of the object; throws UsageError when
/// another run holds it.
class WorkspaceLock {
public:
  explicit WorkspaceLock(const fs::path& root);
  ~WorkspaceLock();
  WorkspaceLock(const WorkspaceLock&) = delete;
  WorkspaceLock& operator=(const WorkspaceLock&) = delete;

private:
  fs::path file_;
};

std::string sha256_hex(std::string_view data);

// ------------------------------------------------------------ oh pipeline

struct OhOptions {
  std::size_t bound_length = 6;  // sentence universe: codes of strings up to this length
  std::vector<iwb::Code> refute_at;  // probed n for the consistency facet; default: the largest axiom code
  std::vector<iwb::Proof> corpus;    // V-proofs for the Π1 facet
  std::optional<iwb::Code> pi1_bound;  // largest code of a transferred theorem; default the certificate's x
};

/// Interpretability via the Henkin pipeline, bounded consistency via
/// refutation search, and transfer of universal theorems through the
/// certificate. Throws std::runtime_error prefixed with the failing stage.
Report pipeline_oh(const iwb::TheorySpec& V, const OhOptions& opt, const Config& config);

/// Runs one command line; reports go to `out`, usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wb
