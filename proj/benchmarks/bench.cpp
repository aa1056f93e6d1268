#include <benchmark/benchmark.h>

#include <random>

#include "neutro/graphs.hpp"
#include "neutro/mcdm.hpp"

using namespace neutro;

namespace {

DecisionProblem<SVNHFE> hesitant_problem(std::size_t n, std::size_t m) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DecisionProblem<SVNHFE> p;
    for (std::size_t a = 0; a < n; ++a) p.alternatives.push_back("A" + std::to_string(a));
    for (std::size_t c = 0; c < m; ++c) p.criteria.push_back({"C" + std::to_string(c), CriterionKind::Benefit});
    p.weights = Weights(m, 1.0 / static_cast<double>(m));
    p.cells.assign(n, std::vector<SVNHFE>(m));
    for (auto& row : p.cells)
        for (auto& x : row) x = SVNHFE({u(rng), u(rng)}, {u(rng)}, {u(rng), u(rng)});
    return p;
}

SvnGraph cycle(int n) {
    SvnGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), {0.6, 0.2, 0.3});
    for (int v = 0; v < n; ++v) g.add_edge("v" + std::to_string(v), "v" + std::to_string((v + 1) % n), {0.4, 0.3, 0.4});
    return g;
}

}  // namespace

static void BM_IdealDistance(benchmark::State& s) {
    auto p = hesitant_problem(static_cast<std::size_t>(s.range(0)), 8);
    for (auto _ : s) benchmark::DoNotOptimize(svnhf_ideal_rank(p, {}));
}
BENCHMARK(BM_IdealDistance)->Arg(16)->Arg(128);

static void BM_Gra(benchmark::State& s) {
    auto p = hesitant_problem(static_cast<std::size_t>(s.range(0)), 8);
    for (auto _ : s) benchmark::DoNotOptimize(gra_svnhf(p));
}
BENCHMARK(BM_Gra)->Arg(16)->Arg(128);

static void BM_GraphHausdorff(benchmark::State& s) {
    auto a = cycle(static_cast<int>(s.range(0))), b = cycle(static_cast<int>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(graph_hausdorff(a, b, HausdorffForm::Ngd));
}
BENCHMARK(BM_GraphHausdorff)->Arg(8)->Arg(64);
BENCHMARK_MAIN();
