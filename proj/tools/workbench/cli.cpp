#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <gmpxx.h>
#include <iostream>

#include "iwb/checker.hpp"
#include "iwb/coding.hpp"
#include "iwb/cut.hpp"
#include "iwb/pudlak.hpp"
#include "iwb/sexpr.hpp"
#include "iwb/syntax_io.hpp"
#include "workbench.hpp"

namespace wb {

namespace {

struct Globals {
  bool json = false;
  std::string workspace;
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
};

// Option storage shared by the subcommands; each reads what it declared.
struct Args {
  std::string a, b, c;  // positionals
  std::string theory, alphabet = "", notion = "sa", relative, save, out, order = "<", corpus;
  std::string n = "0", bound_code;
  std::size_t count = 1000, bits = 256, size = 12, depth = 2, terms = 5, scale = 1, bound = 6, max_domain = 0;
  std::vector<std::string> refute_at;
  bool open = false;
};

struct Ctx {
  Globals g;
  Args x;
  std::function<void(Report&)> action;
  std::optional<Workspace> ws_;
  bool writes = false;

  Workspace& ws() {
    if (!ws_) {
      std::string root = g.workspace;
      if (root.empty()) {
        const char* home = std::getenv("WORKBENCH_HOME");
        root = home ? home : ".workbench";
      }
      ws_.emplace(root);
      if (g.budget) {
        ws_->config().refute.max_facts = *g.budget;
        ws_->config().oracle.max_steps = *g.budget;
      }
    }
    return *ws_;
  }
};

iwb::Code code_arg(const std::string& s, const char* what) {
  try {
    iwb::Code c(s);
    if (c < 0) throw std::invalid_argument("negative");
    return c;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a natural number, got '" + s + "'");
  }
}

iwb::Formula formula_arg(const std::string& text, const iwb::Signature* sig) { return iwb::read_formula(text, sig); }

void set(Report& r, bool ok, Verdict yes, Verdict no) { r.verdict = ok ? yes : no; }

std::string summary(const iwb::CertificateReport& rep) {
  std::string s = std::string(iwb::notion_name(rep.notion)) + ": " + (rep.ok ? "ok" : "failed") + ", " +
                  std::to_string(rep.witnesses) + " witness(es) checked";
  if (rep.ok && (rep.notion == iwb::Notion::A || rep.notion == iwb::Notion::SA))
    s += ", axioms up to a " + std::to_string(iwb::len(rep.x)) + "-bit code";
  if (rep.notion == iwb::Notion::SA || rep.notion == iwb::Notion::ST)
    s += ", largest witness code " + std::to_string(iwb::len(rep.y)) + " bits";
  return s;
}

// ------------------------------------------------------------ code

void add_code(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("code", "Gödel codes, numerals");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* enc = area->add_subcommand("encode", "code of a string over the syntax alphabet (or --alphabet)");
  enc->add_option("text", x.a)->required();
  enc->add_option("--alphabet", x.alphabet, "characters of a single-character alphabet");
  enc->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Alphabet A = x.alphabet.empty() ? iwb::syntax_alphabet() : iwb::Alphabet::of_chars(x.alphabet);
      iwb::Code c = iwb::encode(x.a, A);
      r.data = {{"text", x.a}, {"code", c.get_str()}, {"bits", iwb::len(c)}};
      r.diagnostics.push_back("code " + c.get_str());
      r.verdict = Verdict::Found;
    };
  });

  auto* dec = area->add_subcommand("decode", "string with the given code");
  dec->add_option("code", x.a)->required();
  dec->add_option("--alphabet", x.alphabet);
  dec->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Alphabet A = x.alphabet.empty() ? iwb::syntax_alphabet() : iwb::Alphabet::of_chars(x.alphabet);
      std::string s = iwb::decode(code_arg(x.a, "code"), A);
      r.data = {{"code", x.a}, {"text", s}};
      r.diagnostics.push_back("text \"" + s + "\"");
      r.verdict = Verdict::Found;
    };
  });

  auto* form = area->add_subcommand("formula", "serialization and code of a formula");
  form->add_option("formula", x.a)->required();
  form->add_option("--theory", x.theory, "signature to code against");
  form->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Signature sig;
      if (!x.theory.empty()) sig = ctx.ws().theory(x.theory, r).signature();
      iwb::Formula f = formula_arg(x.a, x.theory.empty() ? nullptr : &sig);
      if (x.theory.empty()) iwb::extend_signature(sig, f);
      std::string s = iwb::serialize(f, sig);
      iwb::Code c = iwb::code_of_serialized(s);
      r.data = {{"formula", iwb::print(f)}, {"serialized", s}, {"code", c.get_str()}};
      r.diagnostics.push_back(s + " -> " + c.get_str());
      r.verdict = Verdict::Found;
    };
  });

  auto* num = area->add_subcommand("numeral", "efficient numeral of n and its evaluation");
  num->add_option("n", x.a)->required();
  num->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Code n = code_arg(x.a, "n");
      iwb::Term t = iwb::numeral(n);
      iwb::Code v = iwb::eval_term(t);
      std::size_t symbols = iwb::serialize(t).size();
      r.data = {{"n", n.get_str()}, {"numeral", iwb::print(t)}, {"symbols", symbols}, {"bits", iwb::len(n)}};
      r.diagnostics.push_back(std::to_string(symbols) + " symbols for " + std::to_string(iwb::len(n)) + " bits");
      set(r, v == n, Verdict::Agreement, Verdict::Disagreement);
      if (v != n) r.witness = "evaluates to " + v.get_str();
    };
  });

  auto* rt = area->add_subcommand("roundtrip", "decode/encode on random codes (uses --seed)");
  rt->add_option("--count", x.count);
  rt->add_option("--bits", x.bits);
  rt->callback([&] {
    ctx.action = [&](Report& r) {
      gmp_randclass rng(gmp_randinit_default);
      rng.seed(static_cast<unsigned long>(ctx.g.seed));
      const iwb::Alphabet& A = iwb::syntax_alphabet();
      r.verdict = Verdict::Agreement;
      for (std::size_t i = 0; i < x.count; ++i) {
        iwb::Code c = rng.get_z_bits(static_cast<unsigned long>(x.bits));
        if (iwb::encode(iwb::decode(c, A), A) != c) {
          r.verdict = Verdict::Disagreement;
          r.witness = c.get_str();
          break;
        }
      }
      r.data = {{"count", x.count}, {"bits", x.bits}, {"seed", ctx.g.seed}};
      r.diagnostics.push_back(std::to_string(x.count) + " codes of up to " + std::to_string(x.bits) + " bits");
    };
  });
}

// ------------------------------------------------------------ prove

void add_prove(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("prove", "proof checking, restricted provability, refutation search");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* check = area->add_subcommand("check", "check a natural-deduction proof");
  check->add_option("proof", x.a)->required();
  check->add_option("--theory", x.theory)->required();
  check->add_flag("--open", x.open, "allow open assumptions");
  check->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec U = ctx.ws().theory(x.theory, r);
      iwb::Proof p = ctx.ws().proof(x.a, &U.signature(), r);
      try {
        iwb::CheckResult c = iwb::check_proof(p, U, !x.open);
        r.data = {{"conclusion", iwb::print(c.conclusion)}, {"nodes", p.size()}, {"open", c.open.size()}};
        r.diagnostics.push_back("concludes " + iwb::print(c.conclusion));
        r.verdict = Verdict::Certified;
      } catch (const iwb::ProofError& e) {
        r.diagnostics.push_back(e.what());
        r.verdict = Verdict::Rejected;
      }
    };
  });

  auto* stats = area->add_subcommand("stats", "size, height, largest axiom code and rho");
  stats->add_option("proof", x.a)->required();
  stats->add_option("--theory", x.theory)->required();
  stats->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec U = ctx.ws().theory(x.theory, r);
      iwb::Proof p = ctx.ws().proof(x.a, &U.signature(), r);
      iwb::ProofStats s = iwb::proof_stats(p, U);
      r.data = {{"nodes", s.nodes}, {"height", p.height()}, {"max_rho", s.max_rho}, {"max_rho_path", s.max_rho_path},
                {"max_code_path", s.max_code_path}};
      r.diagnostics.push_back(std::to_string(s.nodes) + " nodes, rho " + std::to_string(s.max_rho));
      r.verdict = Verdict::Found;
    };
  });

  auto* restricted = area->add_subcommand("restricted", "is the proof restricted by n");
  restricted->add_option("proof", x.a)->required();
  restricted->add_option("--theory", x.theory)->required();
  restricted->add_option("--n", x.n)->required();
  restricted->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec U = ctx.ws().theory(x.theory, r);
      iwb::Proof p = ctx.ws().proof(x.a, &U.signature(), r);
      try {
        iwb::check_proof(p, U);
      } catch (const iwb::ProofError& e) {
        r.diagnostics.push_back(e.what());
        r.verdict = Verdict::Rejected;
        return;
      }
      iwb::RestrictedVerdict v = iwb::check_restricted(p, U, code_arg(x.n, "n"));
      if (!v.ok) r.diagnostics.push_back(v.path + ": " + v.reason);
      set(r, v.ok, Verdict::Certified, Verdict::Rejected);
    };
  });

  auto* refute = area->add_subcommand("refute", "bounded search for a proof of bot");
  refute->add_option("theory", x.a)->required();
  refute->add_option("--n", x.n, "axiom code and rho bound; default: the largest axiom code");
  refute->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec U = ctx.ws().theory(x.a, r);
      iwb::Code n = code_arg(x.n, "n");
      if (n == 0)
        for (const auto& ax : U.listed_axioms()) n = std::max(n, ax.code);
      const iwb::RefuteBudget& b = ctx.ws().config().refute;
      iwb::RefuteResult res = iwb::search_refutation(U, n, b);
      r.data = {{"n", n.get_str()}, {"facts", res.facts}, {"candidates", res.candidates}, {"saturated", res.saturated},
                {"budget", iwb::budget_tag(b)}};
      if (res.found()) {
        r.data["proof"] = iwb::print(*res.proof);
        r.diagnostics.push_back("refutation with " + std::to_string(res.proof->size()) + " nodes");
      } else {
        r.diagnostics.push_back(res.saturated ? "search space exhausted below the bounds"
                                              : "budget exhausted after " + std::to_string(res.facts) + " facts");
      }
      set(r, res.found(), Verdict::Found, Verdict::Exhausted);
    };
  });
}

// ------------------------------------------------------------ interp

void add_interp(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("interp", "translations, translated proofs, certificates");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* tr = area->add_subcommand("translate", "k-translation of a sentence or formula");
  tr->add_option("translation", x.a)->required();
  tr->add_option("formula", x.b)->required();
  tr->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation k = ctx.ws().translation(x.a, r);
      iwb::Formula f = formula_arg(x.b, &k.source);
      iwb::Formula t = iwb::translate_closure(k, f);
      r.data = {{"formula", iwb::print(f)}, {"translation", iwb::print(t)}};
      r.diagnostics.push_back(iwb::print(t));
      r.verdict = Verdict::Found;
    };
  });

  auto* pr = area->add_subcommand("proof", "translate a V-proof; with --certificate, check the U-witness");
  pr->add_option("translation", x.a)->required();
  pr->add_option("proof", x.b)->required();
  pr->add_option("--certificate", x.c);
  pr->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation k = ctx.ws().translation(x.a, r);
      iwb::Proof p = ctx.ws().proof(x.b, &k.source, r);
      iwb::TranslatedProof t = iwb::translate_proof(k, p);
      json obl = json::array();
      for (const auto& [l, f] : t.obligations) obl.push_back({{"label", l}, {"formula", iwb::print(f)}});
      r.data = {{"conclusion", iwb::print(t.proof.conclusion())}, {"nodes", t.proof.size()}, {"obligations", obl}};
      r.diagnostics.push_back(std::to_string(t.proof.size()) + " nodes, " + std::to_string(t.obligations.size()) +
                              " obligation(s)");
      if (x.c.empty()) {
        r.verdict = Verdict::Found;
        return;
      }
      iwb::InterpretationCertificate c = ctx.ws().certificate(x.c, r);
      try {
        iwb::Proof w = iwb::theorem_witness(c, p);
        iwb::CheckResult cr = iwb::check_proof(w, c.U, true);
        bool ok = iwb::alpha_equal(cr.conclusion, iwb::translate_closure(c.k, iwb::check_proof(p, c.V, true).conclusion));
        if (!ok) r.diagnostics.push_back("witness concludes " + iwb::print(cr.conclusion));
        set(r, ok, Verdict::Certified, Verdict::Rejected);
      } catch (const std::exception& e) {
        r.diagnostics.push_back(e.what());
        r.verdict = Verdict::Rejected;
      }
    };
  });

  auto* ver = area->add_subcommand("verify", "verify an interpretation certificate");
  ver->add_option("certificate", x.a)->required();
  ver->add_option("--notion", x.notion, "a, sa, t or st");
  ver->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::InterpretationCertificate c = ctx.ws().certificate(x.a, r);
      iwb::CertificateReport rep = iwb::verify_certificate(c, iwb::notion_from_name(x.notion));
      r.data = {{"notion", x.notion}, {"x", rep.x.get_str()}, {"y_bits", iwb::len(rep.y)}, {"witnesses", rep.witnesses}};
      r.diagnostics.push_back(summary(rep));
      for (const auto& f : rep.failures) r.diagnostics.push_back(f);
      set(r, rep.ok, Verdict::Certified, Verdict::Rejected);
    };
  });

  auto* dual = area->add_subcommand("dual", "compare M |= phi^j with M^j |= phi");
  dual->add_option("translation", x.a)->required();
  dual->add_option("structure", x.b)->required();
  dual->add_option("sentence", x.c)->required();
  dual->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation j = ctx.ws().translation(x.a, r);
      iwb::Structure M = ctx.ws().structure(x.b, r);
      iwb::Formula f = formula_arg(x.c, &j.source);
      if (!f.is_sentence()) throw UsageError("dual takes a sentence");
      iwb::InternalModel I = iwb::internal_model(M, j);
      bool outside = iwb::eval(M, iwb::translate_closure(j, f));
      bool inside = iwb::eval(I.model, f);
      r.data = {{"M_phi_j", outside}, {"Mj_phi", inside}, {"internal_size", I.model.size}};
      for (const auto& d : I.diagnosis) r.diagnostics.push_back("internal model: " + d);
      set(r, outside == inside, Verdict::Agreement, Verdict::Disagreement);
      if (outside != inside) r.witness = iwb::print(f);
    };
  });

  auto* bound = area->add_subcommand("bound", "size bound for translated proofs restricted by n");
  bound->add_option("translation", x.a)->required();
  bound->add_option("--n", x.n)->required();
  bound->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation k = ctx.ws().translation(x.a, r);
      iwb::Code b = iwb::size_bound(code_arg(x.n, "n"), k);
      r.data = {{"n", x.n}, {"bound", b.get_str()}, {"bits", iwb::len(b)}};
      r.diagnostics.push_back("bound has " + std::to_string(iwb::len(b)) + " bits");
      r.verdict = Verdict::Found;
    };
  });

  auto* norm = area->add_subcommand("normalize", "identity-preserving normal form");
  norm->add_option("translation", x.a)->required();
  norm->add_option("--order", x.order, "binary target symbol ordering the domain");
  norm->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation k = iwb::normalize_identity(ctx.ws().translation(x.a, r), x.order);
      std::string text = iwb::write_sexp_pretty(iwb::translation_sexp(k));
      r.data = {{"translation", text}};
      r.diagnostics.push_back(text);
      r.verdict = Verdict::Found;
    };
  });
}

// ------------------------------------------------------------ cut

void add_cut(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("cut", "definable cuts, Pudlák's construction, the Feferman transform");
  area->require_subcommand(1);
  Args& x = ctx.x;
  static const iwb::Signature arith = iwb::Signature::arithmetic_language();

  auto* obl = area->add_subcommand("obligations", "the four cut conditions for J(x)");
  obl->add_option("formula", x.a)->required();
  obl->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Formula J = formula_arg(x.a, &arith);
      json out = json::array();
      std::vector<iwb::Formula> os = iwb::cut_obligations(J);
      for (std::size_t i = 0; i < os.size(); ++i) {
        std::string name(iwb::cut_clause_name(static_cast<iwb::CutClause>(i)));
        out.push_back({{"clause", name}, {"formula", iwb::print(os[i])}});
        r.diagnostics.push_back(name + ": " + iwb::print(os[i]));
      }
      r.data = {{"obligations", out}};
      r.verdict = Verdict::Found;
    };
  });

  auto* close = area->add_subcommand("close", "shorten J(x) to a cut closed under + and *");
  close->add_option("formula", x.a)->required();
  close->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Formula J = iwb::close_cut(formula_arg(x.a, &arith));
      r.data = {{"cut", iwb::print(J)}};
      r.diagnostics.push_back(iwb::print(J));
      r.verdict = Verdict::Found;
    };
  });

  auto* mem = area->add_subcommand("membership", "proof that n lies in the trivial cut, with its size law");
  mem->add_option("--n", x.n)->required();
  mem->add_option("--theory", x.theory, "arithmetic theory; default base arithmetic");
  mem->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec U = x.theory.empty() ? iwb::base_arithmetic() : ctx.ws().theory(x.theory, r);
      iwb::Code n = code_arg(x.n, "n");
      iwb::CutSpec c = iwb::trivial_cut(U);
      iwb::Proof p = iwb::prove_cut_membership(c, n);
      iwb::CheckResult cr = iwb::check_proof(p, U, true);
      bool concludes = iwb::alpha_equal(cr.conclusion, iwb::cut_at(c.J, iwb::numeral(n)));
      std::size_t bits = std::max<std::size_t>(1, iwb::len(n));
      double limit = ctx.ws().config().membership_constant * static_cast<double>(bits);
      r.data = {{"n", n.get_str()}, {"nodes", p.size()}, {"bits", bits}, {"limit", limit}};
      r.diagnostics.push_back(std::to_string(p.size()) + " nodes for " + std::to_string(bits) + " bits (limit " +
                              std::to_string(static_cast<std::size_t>(limit)) + ")");
      if (!concludes) r.diagnostics.push_back("proof concludes " + iwb::print(cr.conclusion));
      set(r, concludes && static_cast<double>(p.size()) <= limit, Verdict::Certified, Verdict::Rejected);
    };
  });

  auto* pud = area->add_subcommand("pudlak", "H, J' and the agreement checks on a standard-prefix model");
  pud->add_option("translation", x.a)->required();
  pud->add_option("--relative", x.relative, "formula I(x) over arithmetic for the relative variant");
  pud->add_option("--size", x.size, "model size");
  pud->add_option("--depth", x.depth, "Δ0 formula depth");
  pud->add_option("--terms", x.terms, "largest term size for the term law");
  pud->add_option("--scale", x.scale, "sequences code h(i) = scale * i");
  pud->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Translation j = ctx.ws().translation(x.a, r);
      iwb::PudlakArtifacts P = x.relative.empty() ? iwb::build_pudlak(j)
                                                  : iwb::build_pudlak_relative(j, formula_arg(x.relative, &arith));
      std::size_t k = x.scale;
      iwb::Structure M =
          iwb::sequence_model(P.host, x.size, iwb::canonical_codes(x.size, [k](std::size_t i) { return k * i; }), P.kit);
      iwb::PudlakTable t = iwb::compute_h(M, P, false);
      bool functional = true;
      json images = json::array();
      for (iwb::Elem e = 0; e < t.jprime; ++e) {
        functional = functional && t.images[e].size() <= 1;
        images.push_back(t.images[e]);
      }
      std::vector<iwb::AgreementReport> reps = {iwb::check_delta0_agreement(M, P, static_cast<unsigned>(x.depth), &t),
                                                iwb::check_term_law(M, P, x.terms, &t)};
      if (!x.relative.empty()) reps.push_back(iwb::check_confinement(M, P, &t));
      const char* names[] = {"delta0", "term-law", "confinement"};
      r.data = {{"jprime", t.jprime}, {"images", images}, {"functional", functional}};
      bool ok = functional;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        r.data[names[i]] = {{"formulas", reps[i].formulas}, {"checked", reps[i].checked}, {"skipped", reps[i].skipped}};
        r.diagnostics.push_back(std::string(names[i]) + ": " + std::to_string(reps[i].checked) + " checked, " +
                                std::to_string(reps[i].skipped) + " skipped, " +
                                std::to_string(reps[i].problems.size()) + " problem(s)");
        for (const auto& p : reps[i].problems) r.diagnostics.push_back("  " + p);
        if (!reps[i].ok() && r.witness.empty()) r.witness = reps[i].problems.front();
        ok = ok && reps[i].ok();
      }
      if (!functional && r.witness.empty()) r.witness = "H is not functional";
      set(r, ok, Verdict::Agreement, Verdict::Disagreement);
    };
  });

  auto* fef = area->add_subcommand("feferman", "keep each axiom while no refutation below its code is found");
  fef->add_option("theory", x.a)->required();
  fef->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TheorySpec V = ctx.ws().theory(x.a, r);
      const iwb::RefuteBudget& b = ctx.ws().config().refute;
      iwb::TheorySpec W = iwb::feferman_restrict(V, b);
      json kept = json::array(), dropped = json::array();
      for (const auto& ax : V.listed_axioms()) {
        json e = {{"code", ax.code.get_str()}, {"axiom", iwb::print(ax.formula)}};
        (W.recognizes(ax.formula) ? kept : dropped).push_back(e);
        if (!W.recognizes(ax.formula)) r.diagnostics.push_back("excluded " + iwb::print(ax.formula));
      }
      r.data = {{"theory", W.name()}, {"kept", kept}, {"excluded", dropped}, {"budget", iwb::budget_tag(b)}};
      r.diagnostics.push_back(std::to_string(kept.size()) + " kept, " + std::to_string(dropped.size()) + " excluded");
      r.verdict = Verdict::Certified;
    };
  });
}

// ------------------------------------------------------------ model

void add_model(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("model", "finite structures: search, evaluation, internal models");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* find = area->add_subcommand("find", "smallest model of the axioms up to --max-domain");
  find->add_option("theory", x.a)->required();
  find->add_option("--max-domain", x.max_domain);
  find->add_option("--save", x.save, "store the model as a named structure");
  find->callback([&] {
    ctx.writes = !x.save.empty();
    ctx.action = [&](Report& r) {
      iwb::TheorySpec V = ctx.ws().theory(x.a, r);
      iwb::SearchOptions o = ctx.ws().config().oracle;
      if (x.max_domain) o.max_domain = x.max_domain;
      iwb::SearchStats st;
      std::optional<iwb::Structure> M = iwb::find_model(V, o, &st);
      r.data = {{"steps", st.steps}, {"budget_hit", st.budget_hit}, {"max_domain", o.max_domain}};
      if (M) {
        r.data["structure"] = iwb::structure_json(*M);
        r.diagnostics.push_back("model of size " + std::to_string(M->size));
        if (!x.save.empty()) ctx.ws().save_text("structures", x.save, iwb::structure_json(*M).dump(2) + "\n");
        r.verdict = Verdict::Found;
      } else {
        r.diagnostics.push_back(st.budget_hit ? "step budget hit" : "no model up to size " + std::to_string(o.max_domain));
        r.verdict = st.budget_hit ? Verdict::Exhausted : Verdict::NoneFound;
      }
    };
  });

  auto* ev = area->add_subcommand("eval", "truth of a sentence in a structure");
  ev->add_option("structure", x.a)->required();
  ev->add_option("sentence", x.b)->required();
  ev->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Structure M = ctx.ws().structure(x.a, r);
      iwb::Formula f = formula_arg(x.b, &M.sig);
      bool v = iwb::eval(M, f);
      r.data = {{"sentence", iwb::print(f)}, {"value", v}};
      r.diagnostics.push_back(v ? "true" : "false");
      set(r, v, Verdict::Certified, Verdict::Rejected);
    };
  });

  auto* in = area->add_subcommand("internal", "the internal model M^j");
  in->add_option("structure", x.a)->required();
  in->add_option("translation", x.b)->required();
  in->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::Structure M = ctx.ws().structure(x.a, r);
      iwb::Translation j = ctx.ws().translation(x.b, r);
      iwb::InternalModel I = iwb::internal_model(M, j);
      r.data = {{"structure", iwb::structure_json(I.model)}, {"classes", I.classes}};
      r.diagnostics.push_back("internal model of size " + std::to_string(I.model.size));
      for (const auto& d : I.diagnosis) r.diagnostics.push_back(d);
      set(r, I.sound(), Verdict::Certified, Verdict::Rejected);
    };
  });
}

// ------------------------------------------------------------ henkin

void add_henkin(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("henkin", "witness extension, completion, term model, certificates");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* run = area->add_subcommand("run", "complete a theory against the finite-model oracle");
  run->add_option("theory", x.a)->required();
  run->add_option("--bound", x.bound, "sentence universe: strings up to this length");
  run->add_option("--bound-code", x.bound_code, "sentence universe: codes up to this number");
  run->add_option("--oracle-domain", x.max_domain, "largest model the oracle tries");
  run->add_option("--save", x.save, "state name; default the theory name");
  run->callback([&] {
    ctx.writes = true;
    ctx.action = [&](Report& r) {
      iwb::TheorySpec V = ctx.ws().theory(x.a, r);
      iwb::Code b = x.bound_code.empty() ? iwb::code_bound_for_length(x.bound) : code_arg(x.bound_code, "bound");
      iwb::SearchOptions o = ctx.ws().config().oracle;
      if (x.max_domain) o.max_domain = x.max_domain;
      iwb::HenkinState s;
      try {
        s = iwb::henkin_complete(V, b, o);
      } catch (const iwb::HenkinError& e) {
        r.diagnostics.push_back(e.what());
        r.verdict = Verdict::Rejected;
        return;
      }
      std::string name = x.save.empty() ? V.name() : x.save;
      ctx.ws().save_text("henkin", name, iwb::henkin_state_json(s).dump(2) + "\n");
      r.data = {{"state", name}, {"bound", b.get_str()}, {"witnesses", s.witnesses.size()}, {"W", s.W.size()},
                {"named", s.named}, {"truncated", s.truncated}};
      r.diagnostics.push_back(std::to_string(s.W.size()) + " sentences decided, " + std::to_string(s.witnesses.size()) +
                              " witnesses; state " + name);
      if (s.truncated) r.diagnostics.push_back("truncated: " + s.reason);
      set(r, !s.truncated, Verdict::Certified, Verdict::Exhausted);
    };
  });

  auto* mod = area->add_subcommand("model", "term model of a saved state");
  mod->add_option("state", x.a)->required();
  mod->callback([&] {
    ctx.action = [&](Report& r) {
      iwb::TermModel t = iwb::term_model(ctx.ws().henkin_state(x.a, r));
      r.data = {{"structure", iwb::structure_json(t.model)}, {"names", t.names}, {"partial", t.partial}};
      r.diagnostics.push_back("term model of size " + std::to_string(t.model.size));
      for (const auto& f : t.failures) r.diagnostics.push_back(f);
      set(r, t.ok(), Verdict::Certified, Verdict::Rejected);
    };
  });

  auto* cert = area->add_subcommand("certify", "certificate from the term model, verified at sa");
  cert->add_option("state", x.a)->required();
  cert->add_option("--out", x.out, "certificate name; default the state name");
  cert->callback([&] {
    ctx.writes = true;
    ctx.action = [&](Report& r) {
      iwb::HenkinState s = ctx.ws().henkin_state(x.a, r);
      iwb::TermModel t = iwb::term_model(s);
      if (!t.ok()) {
        for (const auto& f : t.failures) r.diagnostics.push_back(f);
        if (t.partial) r.diagnostics.push_back("state is truncated");
        r.verdict = Verdict::Rejected;
        return;
      }
      iwb::Structure N = t.model;
      N.sig = s.base.signature();
      for (const auto& w : s.witnesses) N.tables.erase(w.constant);
      iwb::InterpretationCertificate c = iwb::interpretation_from_model(N, s.base);
      iwb::CertificateReport rep = iwb::verify_certificate(c, iwb::Notion::SA);
      std::string name = x.out.empty() ? fs::path(x.a).stem().string() : x.out;
      fs::path dir = ctx.ws().slot("certificates", name);
      iwb::write_certificate(dir.string(), c);
      r.data = {{"certificate", name}, {"x", rep.x.get_str()}, {"y_bits", iwb::len(rep.y)}, {"witnesses", rep.witnesses}};
      r.diagnostics.push_back(summary(rep));
      for (const auto& f : rep.failures) r.diagnostics.push_back(f);
      set(r, rep.ok, Verdict::Certified, Verdict::Rejected);
    };
  });
}

// ------------------------------------------------------------ oh

void add_oh(CLI::App& app, Ctx& ctx) {
  auto* area = app.add_subcommand("oh", "interpretability, consistency and universal theorems side by side");
  area->require_subcommand(1);
  Args& x = ctx.x;

  auto* rep = area->add_subcommand("report", "run the three facets at the given bounds");
  rep->add_option("theory", x.a)->required();
  rep->add_option("--bound", x.bound, "sentence universe: strings up to this length");
  rep->add_option("--refute-n", x.refute_at, "bounds probed by refutation search");
  rep->add_option("--corpus", x.corpus, "directory of V-proofs (*.proof)");
  rep->add_option("--pi1-bound", x.bound_code, "largest code of a universal theorem to transfer");
  rep->callback([&] {
    ctx.action = [&](Report& r) {
      Report in;
      iwb::TheorySpec V = ctx.ws().theory(x.a, in);
      OhOptions o;
      o.bound_length = x.bound;
      if (!x.bound_code.empty()) o.pi1_bound = code_arg(x.bound_code, "--pi1-bound");
      for (const auto& n : x.refute_at) o.refute_at.push_back(code_arg(n, "--refute-n"));
      if (!x.corpus.empty()) {
        fs::path dir = x.corpus;
        if (!fs::is_directory(dir) && dir.is_relative()) dir = ctx.ws().root() / dir;
        if (!fs::is_directory(dir)) throw UsageError("no corpus directory " + x.corpus);
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir))
          if (e.path().extension() == ".proof") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) o.corpus.push_back(ctx.ws().proof(f.string(), &V.signature(), in));
      }
      r = pipeline_oh(V, o, ctx.ws().config());
      r.inputs = in.inputs;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  CLI::App app{"Metamathematics workbench", "interp-workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.g.json, "print the report as JSON");
  app.add_option("--workspace", ctx.g.workspace, "workspace directory (default $WORKBENCH_HOME or .workbench)");
  app.add_option("--seed", ctx.g.seed, "seed for randomized helpers");
  app.add_option("--budget", ctx.g.budget, "step budget for searches (refutation facts, model search steps)");
  add_code(app, ctx);
  add_prove(app, ctx);
  add_interp(app, ctx);
  add_cut(app, ctx);
  add_model(app, ctx);
  add_henkin(app, ctx);
  add_oh(app, ctx);

  std::vector<const char*> argv = {"interp-workbench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  Report r;
  std::string path;
  for (auto* s = app.get_subcommands().front(); s; s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front())
    path += (path.empty() ? "" : " ") + s->get_name();
  r.command = path;
  auto start = std::chrono::steady_clock::now();
  try {
    std::optional<WorkspaceLock> lock;
    if (ctx.writes) lock.emplace(ctx.ws().root());
    ctx.action(r);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  r.command = path;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ctx.g.json)
    out << r.to_json().dump(2) << "\n";
  else
    out << r.text();
  return positive(r.verdict) ? 0 : 1;
}

}  // namespace wb
