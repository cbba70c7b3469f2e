#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "linkhom/invariants.hpp"

using namespace linkhom;

namespace {

EmbeddingCode load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

UniversePtr universe(int colors, int per_color) {
  std::vector<Variable> vars;
  for (int c = 1; c <= colors; ++c)
    for (int j = 1; j <= per_color; ++j) vars.push_back({c, j});
  return make_universe(vars);
}

}  // namespace

static void BM_SeriesMultiply(benchmark::State& state) {
  int colors = static_cast<int>(state.range(0));
  auto u = universe(colors, 2);
  std::mt19937 rng(1);
  GroupWord w;
  for (int k = 0; k < 12; ++k)
    w.push({1 + static_cast<int>(rng() % colors), 1 + static_cast<int>(rng() % 2)},
           (rng() % 2) ? 1 : -1);
  MagnusSeries a = expand(w, u);
  MagnusSeries b = a.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(3)->Arg(5)->Arg(7);

static void BM_ResolveMeridians(benchmark::State& state) {
  EmbeddingCode code = load("borromean.sg");
  for (auto _ : state) benchmark::DoNotOptimize(resolve_meridians(code));
}
BENCHMARK(BM_ResolveMeridians);

static void BM_MuBar(benchmark::State& state) {
  EmbeddingCode code = load("borromean.sg");
  for (auto _ : state) benchmark::DoNotOptimize(mu_bar(code));
}
BENCHMARK(BM_MuBar);

static void BM_SimpleCycles(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> verts;
  std::vector<Edge> edges;
  int id = 1;
  for (int v = 1; v <= n; ++v) verts.push_back(v);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) edges.push_back({id++, a, b});
  AbstractGraph g = AbstractGraph::make(verts, edges);
  for (auto _ : state) benchmark::DoNotOptimize(simple_cycles(g, 1, 1u << 20));
}
BENCHMARK(BM_SimpleCycles)->Arg(4)->Arg(5)->Arg(6);

static void BM_SplitVerdict(benchmark::State& state) {
  EmbeddingCode code = load("theta_circle.sg");
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_split(code));
}
BENCHMARK(BM_SplitVerdict);

BENCHMARK_MAIN();
