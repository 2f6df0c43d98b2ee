#include "iwb/certificate.hpp"

#include <filesystem>
#include <nlohmann/json.hpp>

#include "iwb/checker.hpp"
#include "iwb/syntax_io.hpp"

namespace iwb {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string_view notion_name(Notion n) {
  switch (n) {
    case Notion::A: return "a";
    case Notion::SA: return "sa";
    case Notion::T: return "t";
    case Notion::ST: return "st";
  }
  return "?";
}

Notion notion_from_name(std::string_view s) {
  if (s == "a") return Notion::A;
  if (s == "sa") return Notion::SA;
  if (s == "t") return Notion::T;
  if (s == "st") return Notion::ST;
  throw std::invalid_argument("unknown notion " + std::string(s) + " (expected a, sa, t or st)");
}

std::string CertificateReport::text() const {
  std::string out = "notion " + std::string(notion_name(notion)) + ": ";
  if (!ok) {
    out += "rejected";
    if (failed_axiom) out += " at axiom code " + failed_axiom->get_str();
    out += "\n";
    for (const auto& f : failures) out += "  " + f + "\n";
    return out;
  }
  if (notion == Notion::A || notion == Notion::SA)
    out += "certified for every axiom of code <= " + x.get_str();
  else
    out += "certified for " + std::to_string(witnesses) + " supplied theorems";
  if (notion == Notion::SA || notion == Notion::ST) out += "; largest witness code " + y.get_str();
  out += " (" + std::to_string(witnesses) + " witnesses checked)\n";
  return out;
}

Proof plug(const Proof& p, const std::map<std::string, Proof>& by_label) {
  if (by_label.empty()) return p;
  if (p.rule() == Rule::Assume) {
    auto it = by_label.find(p.label());
    return it == by_label.end() ? p : it->second;
  }
  Proof::Node n = p.node();
  auto hiding = [&](std::initializer_list<std::string> labels) {
    std::map<std::string, Proof> m = by_label;
    for (const auto& l : labels) m.erase(l);
    return m;
  };
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    bool scoped = false;
    switch (p.rule()) {
      case Rule::OrE:
        if (i > 0) n.premises[i] = plug(n.premises[i], hiding({i == 1 ? p.label() : p.label2()})), scoped = true;
        break;
      case Rule::ImpI:
      case Rule::NotI:
      case Rule::Raa: n.premises[i] = plug(n.premises[i], hiding({p.label()})), scoped = true; break;
      case Rule::ExistsE:
        if (i == 1) n.premises[i] = plug(n.premises[i], hiding({p.label()})), scoped = true;
        break;
      default: break;
    }
    if (!scoped) n.premises[i] = plug(n.premises[i], by_label);
  }
  return Proof::make(std::move(n));
}

std::optional<Proof> logical_equality_witness(const Translation& k, const std::string& label) {
  auto it = k.rel.find(Symbol::identity().name());
  if (it != k.rel.end()) {
    const RelImage& im = it->second;
    Formula plain = Formula::eq(Term::var(im.params.at(0)), Term::var(im.params.at(1)));
    if (!(im.body == plain)) return std::nullopt;
  }
  std::optional<Formula> source;
  for (auto& [l, f] : equality_obligations(k.source))
    if (l == label) source = f;
  if (!source || label == "eq:nonempty") return std::nullopt;
  Formula goal = translate_formula(k, *source);

  // Peel forall v (delta(v) -> ...) layers.
  std::vector<Formula> levels{goal};
  while (levels.back().is(Formula::Kind::Forall)) levels.push_back(levels.back().body().rhs());
  Formula core = levels.back();
  Proof inner = Proof::refl(Term::var(levels[0].bound_var()));
  if (label != "eq:refl") {
    // core = (a = b) -> (A -> A'), A' is A with one argument moved from a to b.
    const Formula& e = core.lhs();
    Var hole = goal.max_var_plus_one() + 1;
    std::size_t pos = std::stoul(label.substr(label.rfind(':') + 1)) - 1;
    Symbol r(label.substr(3, label.rfind(':') - 3));
    std::vector<Term> args;
    for (int j = 0; j < k.source.arity(r); ++j) args.push_back(Term::var(static_cast<Var>(j)));
    args[pos] = Term::var(hole);
    Formula tmpl = k.image(r, args);
    const Formula& from = core.rhs().lhs();
    Proof moved = Proof::eq_subst(hole, tmpl, Proof::assume("e", e), Proof::assume("a", from));
    inner = Proof::imp_i(e, "e", Proof::imp_i(from, "a", moved));
  }
  for (std::size_t i = levels.size() - 1; i-- > 0;) {
    const Formula& lvl = levels[i];
    Var v = lvl.bound_var();
    std::string dl = "d" + std::to_string(i);
    inner = Proof::forall_i(lvl, v, Proof::imp_i(lvl.body().lhs(), dl, inner));
  }
  return inner;
}

Proof theorem_witness(const InterpretationCertificate& c, const Proof& v_proof) {
  TranslatedProof tp = translate_proof(c.k, v_proof);
  std::map<std::string, Proof> fill;
  for (const auto& [label, f] : tp.obligations) {
    if (label.rfind("ax:", 0) == 0) {
      Code code(label.substr(3));
      auto it = c.axioms.find(code);
      if (it == c.axioms.end()) throw std::runtime_error("certificate has no witness for axiom code " + code.get_str());
      fill.emplace(label, it->second);
    } else {
      auto it = c.equality.find(label);
      if (it != c.equality.end()) fill.emplace(label, it->second);
      else if (auto w = logical_equality_witness(c.k, label)) fill.emplace(label, *w);
      else throw std::runtime_error("certificate has no witness for " + label);
    }
  }
  return plug(tp.proof, fill);
}

namespace {

// Empty string when `w` is a closed U-proof of `goal`.
std::string witness_problem(const Proof& w, const TheorySpec& U, const Formula& goal) {
  try {
    CheckResult r = check_proof(w, U, true);
    if (!alpha_equal(r.conclusion, goal)) return "witness concludes " + print(r.conclusion) + ", expected " + print(goal);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

CertificateReport verify_certificate(const InterpretationCertificate& c, Notion notion) {
  CertificateReport rep;
  rep.notion = notion;
  const Signature& us = c.U.signature();
  auto count = [&](const Proof& w) {
    ++rep.witnesses;
    rep.y = std::max(rep.y, code_syntax(w, us));
  };
  for (const auto& [label, f] : equality_obligations(c.V.signature())) {
    auto it = c.equality.find(label);
    if (it == c.equality.end()) continue;
    std::string bad = witness_problem(it->second, c.U, translate_formula(c.k, f));
    if (!bad.empty()) {
      rep.ok = false;
      rep.failures.push_back(label + ": " + bad);
    }
  }
  if (notion == Notion::A || notion == Notion::SA) {
    for (const auto& ax : c.V.axioms_up_to(c.x)) {
      auto it = c.axioms.find(ax.code);
      std::string bad = it == c.axioms.end() ? "no witness"
                                             : witness_problem(it->second, c.U, translate_closure(c.k, ax.formula));
      if (!bad.empty()) {
        rep.ok = false;
        if (!rep.failed_axiom) rep.failed_axiom = ax.code;
        rep.failures.push_back("axiom " + ax.code.get_str() + " " + print(ax.formula) + ": " + bad);
        continue;
      }
      count(it->second);
    }
    if (rep.ok) rep.x = c.x;
  } else {
    for (std::size_t i = 0; i < c.theorems.size(); ++i) {
      const TheoremPair& t = c.theorems[i];
      std::string tag = "theorem " + std::to_string(i + 1);
      Formula phi = Formula::bot();
      try {
        phi = check_proof(t.source, c.V, true).conclusion;
      } catch (const std::exception& e) {
        rep.ok = false;
        rep.failures.push_back(tag + ": source proof: " + e.what());
        continue;
      }
      std::string bad = witness_problem(t.witness, c.U, translate_closure(c.k, phi));
      if (!bad.empty()) {
        rep.ok = false;
        rep.failures.push_back(tag + ": " + bad);
        continue;
      }
      count(t.witness);
    }
  }
  if (notion == Notion::A || notion == Notion::T) rep.y = rep.ok ? rep.y : Code(0);
  return rep;
}

// -------------------------------------------------------------------- disk

namespace {

std::string file_label(std::string s) {
  for (char& ch : s)
    if (ch == ':' || ch == '/' || ch == '=') ch = '_';
  return s;
}

}  // namespace

void write_certificate(const std::string& dir, const InterpretationCertificate& c) {
  fs::path root(dir);
  fs::create_directories(root / "axioms");
  fs::create_directories(root / "equality");
  fs::create_directories(root / "theorems");
  write_file((root / "translation.sexp").string(), write_sexp_pretty(translation_sexp(c.k)) + "\n");
  write_file((root / "source.theory").string(), write_sexp_pretty(theory_sexp(c.V)) + "\n");
  write_file((root / "target.theory").string(), write_sexp_pretty(theory_sexp(c.U)) + "\n");
  json m;
  m["coverage"] = c.x.get_str();
  m["translation"] = "translation.sexp";
  m["source"] = "source.theory";
  m["target"] = "target.theory";
  m["axioms"] = json::array();
  for (const auto& [code, w] : c.axioms) {
    std::string f = "axioms/" + code.get_str() + ".proof";
    write_file((root / f).string(), print(w) + "\n");
    m["axioms"].push_back({{"code", code.get_str()}, {"file", f}});
  }
  m["equality"] = json::array();
  for (const auto& [label, w] : c.equality) {
    std::string f = "equality/" + file_label(label) + ".proof";
    write_file((root / f).string(), print(w) + "\n");
    m["equality"].push_back({{"label", label}, {"file", f}});
  }
  m["theorems"] = json::array();
  for (std::size_t i = 0; i < c.theorems.size(); ++i) {
    std::string s = "theorems/" + std::to_string(i + 1) + ".source.proof";
    std::string w = "theorems/" + std::to_string(i + 1) + ".witness.proof";
    write_file((root / s).string(), print(c.theorems[i].source) + "\n");
    write_file((root / w).string(), print(c.theorems[i].witness) + "\n");
    m["theorems"].push_back({{"source", s}, {"witness", w}});
  }
  write_file((root / "manifest.json").string(), m.dump(2) + "\n");
}

InterpretationCertificate read_certificate(const std::string& dir) {
  fs::path root(dir);
  json m = json::parse(read_file((root / "manifest.json").string()));
  InterpretationCertificate c;
  c.k = read_translation(read_file((root / m.at("translation").get<std::string>()).string()));
  c.V = read_theory(read_file((root / m.at("source").get<std::string>()).string()));
  c.U = read_theory(read_file((root / m.at("target").get<std::string>()).string()));
  c.x = Code(m.at("coverage").get<std::string>());
  const Signature& vs = c.V.signature();
  const Signature& us = c.U.signature();
  auto proof_at = [&](const std::string& f, const Signature& s) { return read_proof(read_file((root / f).string()), &s); };
  for (const auto& a : m.value("axioms", json::array()))
    c.axioms.emplace(Code(a.at("code").get<std::string>()), proof_at(a.at("file"), us));
  for (const auto& e : m.value("equality", json::array()))
    c.equality.emplace(e.at("label").get<std::string>(), proof_at(e.at("file"), us));
  for (const auto& t : m.value("theorems", json::array()))
    c.theorems.push_back({proof_at(t.at("source"), vs), proof_at(t.at("witness"), us)});
  return c;
}

}  // namespace iwb
