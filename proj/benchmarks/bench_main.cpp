#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include <gmpxx.h>

#include "iwb/checker.hpp"
#include "iwb/coding.hpp"
#include "iwb/cut.hpp"
#include "iwb/henkin.hpp"
#include "iwb/interp.hpp"
#include "iwb/model.hpp"
#include "iwb/pudlak.hpp"
#include "iwb/refute.hpp"
#include "iwb/syntax_io.hpp"

using namespace iwb;
namespace fs = std::filesystem;

namespace {

const std::string kData = IWB_BENCH_DATA;

Signature corpus_signature() {
  Signature s("corpus");
  s.add("P", 1);
  s.add("Q", 1);
  s.add("D", 1);
  s.add("R", 2);
  return s;
}

std::vector<Proof> corpus_proofs() {
  static const std::vector<Proof> proofs = [] {
    Signature sig = corpus_signature();
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(kData + "/corpus/proofs")) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Proof> out;
    for (const auto& f : files) out.push_back(read_proof(read_file(f.string()), &sig));
    return out;
  }();
  return proofs;
}

Translation corpus_translation(const std::string& name) {
  return read_translation(read_file(kData + "/corpus/translations/" + name + ".sexp"));
}

TheorySpec henkin_theory(const std::string& name) { return read_theory(read_file(kData + "/henkin/" + name + ".theory")); }

void BM_EncodeDecode(benchmark::State& st) {
  std::size_t bits = st.range(0);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(1);
  Code c = rng.get_z_bits(bits);
  const Alphabet& A = syntax_alphabet();
  for (auto _ : st) {
    std::string s = decode(c, A);
    benchmark::DoNotOptimize(encode(s, A));
  }
}
BENCHMARK(BM_EncodeDecode)->RangeMultiplier(4)->Range(64, 16384);

void BM_Numeral(benchmark::State& st) {
  Code n = 1;
  n <<= st.range(0);
  n -= 1;
  for (auto _ : st) benchmark::DoNotOptimize(eval_term(numeral(n)));
}
BENCHMARK(BM_Numeral)->DenseRange(8, 64, 8);

void BM_CutMembership(benchmark::State& st) {
  TheorySpec U = base_arithmetic();
  CutSpec c = trivial_cut(U);
  Code n = 1;
  n <<= st.range(0);
  for (auto _ : st) {
    Proof p = prove_cut_membership(c, n);
    benchmark::DoNotOptimize(check_proof(p, U, true));
  }
}
BENCHMARK(BM_CutMembership)->DenseRange(4, 20, 4);

void BM_CheckCorpus(benchmark::State& st) {
  TheorySpec U("logic", corpus_signature());
  const auto& proofs = corpus_proofs();
  for (auto _ : st)
    for (const Proof& p : proofs) benchmark::DoNotOptimize(check_proof(p, U, true));
  st.SetItemsProcessed(st.iterations() * proofs.size());
}
BENCHMARK(BM_CheckCorpus);

void BM_TranslateCorpus(benchmark::State& st, const char* name) {
  Translation k = corpus_translation(name);
  const auto& proofs = corpus_proofs();
  for (auto _ : st)
    for (const Proof& p : proofs) benchmark::DoNotOptimize(translate_proof(k, p));
  st.SetItemsProcessed(st.iterations() * proofs.size());
}
BENCHMARK_CAPTURE(BM_TranslateCorpus, identity, "identity");
BENCHMARK_CAPTURE(BM_TranslateCorpus, relativize_d, "relativize_d");
BENCHMARK_CAPTURE(BM_TranslateCorpus, square, "square");

void BM_RefuteInconsistent(benchmark::State& st) {
  TheorySpec V = henkin_theory("p_and_not_p");
  Code n = 0;
  for (const auto& a : V.listed_axioms()) n = std::max(n, a.code);
  for (auto _ : st) benchmark::DoNotOptimize(search_refutation(V, n));
}
BENCHMARK(BM_RefuteInconsistent);

void BM_FindModel(benchmark::State& st, const char* name) {
  TheorySpec V = henkin_theory(name);
  for (auto _ : st) benchmark::DoNotOptimize(find_model(V));
}
BENCHMARK_CAPTURE(BM_FindModel, order3, "order3");
BENCHMARK_CAPTURE(BM_FindModel, two_colors, "two_colors");

void BM_PudlakTable(benchmark::State& st) {
  PudlakArtifacts P = build_pudlak(read_translation(read_file(kData + "/pudlak/identity.sexp")));
  std::size_t n = st.range(0);
  Structure M = sequence_model(P.host, n, canonical_codes(n, [](std::size_t i) { return i; }));
  for (auto _ : st) benchmark::DoNotOptimize(compute_h(M, P, false));
}
BENCHMARK(BM_PudlakTable)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_HenkinPipeline(benchmark::State& st, const char* name) {
  TheorySpec V = henkin_theory(name);
  Code b = code_bound_for_length(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(henkin_pipeline(V, b));
}
BENCHMARK_CAPTURE(BM_HenkinPipeline, one_p, "one_p")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HenkinPipeline, order3, "order3")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
