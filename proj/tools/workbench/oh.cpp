#include "iwb/checker.hpp"
#include "iwb/syntax_io.hpp"
#include "workbench.hpp"

namespace wb {

namespace {

bool quantifier_free(const iwb::Formula& f) {
  using K = iwb::Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bot: return true;
    case K::Not: return quantifier_free(f.lhs());
    case K::And:
    case K::Or:
    case K::Imp: return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
    default: return false;
  }
}

bool universal(iwb::Formula f) {
  while (f.is(iwb::Formula::Kind::Forall)) f = f.body();
  return quantifier_free(f);
}

template <class Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const iwb::HenkinError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(name + ": " + e.what());
  }
}

}  // namespace

Report pipeline_oh(const iwb::TheorySpec& V, const OhOptions& opt, const Config& config) {
  Report r;
  r.command = "oh report";
  iwb::Code b = iwb::code_bound_for_length(opt.bound_length);
  r.data["bound"] = {{"length", opt.bound_length}, {"code", b.get_str()}};

  // Consistency facet: no refutation at the probed n.
  std::vector<iwb::Code> ns = opt.refute_at;
  if (ns.empty()) {
    iwb::Code top = 0;
    for (const auto& a : V.listed_axioms()) top = std::max(top, a.code);
    ns.push_back(top);
  }
  json con = json::array();
  for (const auto& n : ns) {
    iwb::RefuteResult res = stage("consistency", [&] { return iwb::search_refutation(V, n, config.refute); });
    con.push_back({{"n", n.get_str()}, {"refutation", res.found()}, {"facts", res.facts}, {"saturated", res.saturated}});
    if (res.found()) {
      r.data["consistency"] = con;
      r.verdict = Verdict::Rejected;
      r.diagnostics.push_back("consistency: refutation found at n = " + n.get_str() + " (" +
                              std::to_string(res.proof->size()) + " nodes); pipeline halted");
      return r;
    }
  }
  r.data["consistency"] = con;
  r.diagnostics.push_back("consistency: no refutation at " + std::to_string(ns.size()) + " probed bound(s)");

  // Interpretability facet: U_N interprets V.
  iwb::HenkinRun run;
  try {
    run = stage("interpretability", [&] { return iwb::henkin_pipeline(V, b, config.oracle); });
  } catch (const iwb::HenkinError& e) {
    r.verdict = Verdict::Exhausted;
    r.diagnostics.push_back(std::string("interpretability: ") + e.what() + "; pipeline halted");
    return r;
  }
  if (!run.report || !run.report->ok) {
    // Only a certificate that fails verification is evidence against V.
    r.verdict = run.report ? Verdict::Rejected : Verdict::Exhausted;
    std::string why = run.state.truncated          ? "completion truncated: " + run.state.reason
                      : run.model && !run.model->ok() ? "term model fails: " + run.model->failures.front()
                      : run.report                  ? run.report->text()
                                                    : "no witness constants below the bound";
    r.diagnostics.push_back("interpretability: " + why + "; pipeline halted");
    return r;
  }
  const iwb::InterpretationCertificate& c = *run.certificate;
  r.data["interpretability"] = {{"model_size", run.model->model.size}, {"x", run.report->x.get_str()},
                                {"y_bits", iwb::len(run.report->y)}, {"witnesses", run.report->witnesses},
                                {"W", run.state.W.size()}};
  r.diagnostics.push_back("interpretability: certified at sa by a " + std::to_string(run.model->model.size) +
                          "-element term model");

  // Π1 facet: universal theorems of V transfer to U_N.
  iwb::Code x = opt.pi1_bound ? *opt.pi1_bound : c.x;
  std::size_t transferred = 0, skipped = 0;
  bool ok = true;
  for (std::size_t i = 0; i < opt.corpus.size(); ++i) {
    std::string tag = "pi1: proof " + std::to_string(i + 1);
    stage("pi1", [&] {
      iwb::Formula phi = iwb::check_proof(opt.corpus[i], V, true).conclusion;
      if (!universal(phi) || V.code(phi) > x) {
        ++skipped;
        return 0;
      }
      iwb::Proof w = iwb::theorem_witness(c, opt.corpus[i]);
      iwb::CheckResult t = iwb::check_proof(w, c.U, true);
      if (!iwb::alpha_equal(t.conclusion, iwb::translate_closure(c.k, phi))) {
        ok = false;
        r.diagnostics.push_back(tag + ": translated proof concludes the wrong sentence");
      } else {
        ++transferred;
      }
      return 0;
    });
  }
  r.data["pi1"] = {{"x", x.get_str()}, {"transferred", transferred}, {"skipped", skipped}};
  r.diagnostics.push_back("pi1: " + std::to_string(transferred) + " universal theorem(s) transferred, " +
                          std::to_string(skipped) + " skipped");
  r.verdict = ok ? Verdict::Certified : Verdict::Rejected;
  return r;
}

}  // namespace wb
