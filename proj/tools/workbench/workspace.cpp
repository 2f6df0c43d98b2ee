#include <fcntl.h>
#include <openssl/evp.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "iwb/syntax_io.hpp"
#include "workbench.hpp"

namespace wb {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Rejected: return "rejected";
    case Verdict::Exhausted: return "exhausted";
    case Verdict::Agreement: return "agreement";
    case Verdict::Disagreement: return "disagreement";
    case Verdict::Found: return "found";
    case Verdict::NoneFound: return "none-found";
  }
  return "?";
}

bool positive(Verdict v) { return v == Verdict::Certified || v == Verdict::Agreement || v == Verdict::Found; }

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = json::array();
  for (const auto& [n, h] : inputs) j["inputs"].push_back({{"name", n}, {"sha256", h}});
  j["verdict"] = verdict_name(verdict);
  if (verdict == Verdict::Disagreement) j["witness"] = witness;
  j["diagnostics"] = diagnostics;
  j["data"] = data;
  j["timing"] = {{"seconds", seconds}};
  return j;
}

std::string Report::text() const {
  std::ostringstream o;
  o << command << ": " << verdict_name(verdict);
  if (verdict == Verdict::Disagreement && !witness.empty()) o << " (" << witness << ")";
  o << "\n";
  for (const auto& d : diagnostics) o << "  " << d << "\n";
  return o.str();
}

json Config::to_json() const {
  return {{"refute", {{"max_nodes", refute.max_nodes}, {"max_facts", refute.max_facts}, {"max_witnesses", refute.max_witnesses}}},
          {"oracle", {{"min_domain", oracle.min_domain}, {"max_domain", oracle.max_domain}, {"max_steps", oracle.max_steps}}},
          {"membership_constant", membership_constant}};
}

Config Config::from_json(const json& j) {
  Config c;
  if (j.contains("refute")) {
    const json& r = j["refute"];
    c.refute.max_nodes = r.value("max_nodes", c.refute.max_nodes);
    c.refute.max_facts = r.value("max_facts", c.refute.max_facts);
    c.refute.max_witnesses = r.value("max_witnesses", c.refute.max_witnesses);
  }
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    c.oracle.min_domain = o.value("min_domain", c.oracle.min_domain);
    c.oracle.max_domain = o.value("max_domain", c.oracle.max_domain);
    c.oracle.max_steps = o.value("max_steps", c.oracle.max_steps);
  }
  c.membership_constant = j.value("membership_constant", c.membership_constant);
  return c;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr);
  std::ostringstream o;
  for (unsigned i = 0; i < n; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return o.str();
}

namespace {

const std::map<std::string, std::string>& extensions() {
  static const std::map<std::string, std::string> m = {{"theories", ".theory"},   {"translations", ".sexp"},
                                                       {"proofs", ".proof"},      {"structures", ".json"},
                                                       {"certificates", ""},      {"henkin", ".json"},
                                                       {"formulas", ".sexp"}};
  return m;
}

}  // namespace

Workspace::Workspace(fs::path root) : root_(std::move(root)) {
  fs::path cfg = root_ / "config.json";
  if (fs::exists(cfg)) {
    try {
      config_ = Config::from_json(json::parse(iwb::read_file(cfg.string())));
    } catch (const std::exception& e) {
      throw UsageError("unreadable workspace config " + cfg.string() + ": " + e.what());
    }
  }
}

fs::path Workspace::slot(const std::string& kind, const std::string& name) const {
  auto it = extensions().find(kind);
  if (it == extensions().end()) throw UsageError("unknown artifact kind " + kind);
  return root_ / kind / (name + it->second);
}

fs::path Workspace::resolve(const std::string& kind, const std::string& ref) const {
  if (fs::exists(ref)) return ref;
  fs::path p = slot(kind, ref);
  if (fs::exists(p)) return p;
  throw UsageError("no " + kind + " named " + ref + " (looked for " + ref + " and " + p.string() + ")");
}

std::vector<std::string> Workspace::names(const std::string& kind) const {
  std::vector<std::string> out;
  fs::path dir = root_ / kind;
  if (!fs::is_directory(dir)) return out;
  const std::string& ext = extensions().at(kind);
  for (const auto& e : fs::directory_iterator(dir)) {
    std::string f = e.path().filename().string();
    if (ext.empty() ? e.is_directory() : (f.size() > ext.size() && f.ends_with(ext)))
      out.push_back(f.substr(0, f.size() - ext.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Workspace::read_input(const std::string& kind, const std::string& ref, Report& r) const {
  fs::path p = resolve(kind, ref);
  std::string text = iwb::read_file(p.string());
  r.inputs.emplace_back(ref, sha256_hex(text));
  return text;
}

iwb::TheorySpec Workspace::theory(const std::string& ref, Report& r) const {
  return iwb::read_theory(read_input("theories", ref, r));
}

iwb::Translation Workspace::translation(const std::string& ref, Report& r) const {
  iwb::Translation k = iwb::read_translation(read_input("translations", ref, r));
  k.validate();
  return k;
}

iwb::Proof Workspace::proof(const std::string& ref, const iwb::Signature* sig, Report& r) const {
  return iwb::read_proof(read_input("proofs", ref, r), sig);
}

iwb::Structure Workspace::structure(const std::string& ref, Report& r) const {
  return iwb::structure_from_json(json::parse(read_input("structures", ref, r)));
}

iwb::InterpretationCertificate Workspace::certificate(const std::string& ref, Report& r) const {
  fs::path p = resolve("certificates", ref);
  r.inputs.emplace_back(ref, sha256_hex(iwb::read_file((p / "manifest.json").string())));
  return iwb::read_certificate(p.string());
}

iwb::HenkinState Workspace::henkin_state(const std::string& ref, Report& r) const {
  return iwb::henkin_state_from_json(json::parse(read_input("henkin", ref, r)));
}

void Workspace::save_text(const std::string& kind, const std::string& name, const std::string& text) const {
  fs::path p = slot(kind, name);
  fs::create_directories(p.parent_path());
  iwb::write_file(p.string(), text);
}

WorkspaceLock::WorkspaceLock(const fs::path& root) : file_(root / ".lock") {
  fs::create_directories(root);
  int fd = ::open(file_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    file_.clear();
    throw UsageError("workspace " + root.string() + " is locked by another run (remove .lock if stale)");
  }
  std::string pid = std::to_string(::getpid()) + "\n";
  (void)!::write(fd, pid.data(), pid.size());
  ::close(fd);
}

WorkspaceLock::~WorkspaceLock() {
  if (!file_.empty()) {
    std::error_code ec;
    fs::remove(file_, ec);
  }
}

}  // namespace wb
