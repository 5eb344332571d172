#include <benchmark/benchmark.h>

#include "pucs/rng.hpp"
#include "pucs/solver.hpp"
#include "pucs/verifier.hpp"

using namespace pucs;

namespace {

Vec random_point(Rng& rng, std::size_t n, double scale) {
    Vec v(n);
    for (double& x : v) x = rng.uniform(-scale, scale);
    return v;
}

UcsSet make_union(std::size_t n, int pieces_count) {
    Rng rng(1);
    std::vector<ConvexPiece> pieces;
    for (int t = 0; t < pieces_count; ++t) {
        Vec center = random_point(rng, n, 10.0);
        center[0] += 100.0 * t;
        pieces.emplace_back(Ball{std::move(center), rng.uniform(0.5, 3.0)});
    }
    return UcsSet("bench", std::move(pieces));
}

void BM_project_piece(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    ConvexPiece ball(Ball{Vec(n, 1.0), 2.0});
    Rng rng(2);
    Vec x = random_point(rng, n, 50.0);
    for (auto _ : state) benchmark::DoNotOptimize(project_piece(ball, x));
}
BENCHMARK(BM_project_piece)->Arg(2)->Arg(5)->Arg(50);

void BM_project_ucs(benchmark::State& state) {
    auto pieces_count = static_cast<int>(state.range(0));
    UcsSet set = make_union(3, pieces_count);
    Rng rng(3);
    Vec x = random_point(rng, 3, 200.0);
    for (auto _ : state) benchmark::DoNotOptimize(project_ucs(set, x, 1e-9));
}
BENCHMARK(BM_project_ucs)->Arg(2)->Arg(8)->Arg(32);

void BM_solve_two_unions(benchmark::State& state) {
    std::vector<ConvexPiece> c1;
    c1.emplace_back(Ball{{0.0, 1.0}, 1.0});
    c1.emplace_back(Ball{{100.0, 2.0}, 1.0});
    c1.emplace_back(Ball{{200.0, 2.0}, 1.0});
    c1.emplace_back(Ball{{-100.0, 2.0}, 1.0});
    std::vector<ConvexPiece> c2;
    c2.emplace_back(Ball{{0.0, -1.0}, 1.0});
    c2.emplace_back(Ball{{100.0, -2.0}, 1.0});
    std::vector<UcsSet> sets;
    sets.emplace_back("C1", std::move(c1));
    sets.emplace_back("C2", std::move(c2));
    Problem problem(2, std::move(sets));
    for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_solve_two_unions);

void BM_enumerate_combos(benchmark::State& state) {
    std::vector<UcsSet> sets;
    sets.push_back(make_union(3, 4));
    sets.push_back(make_union(3, 4));
    sets.push_back(make_union(3, 4));
    Problem problem(3, std::move(sets));
    OracleConfig config;
    config.oracle_max_sweeps = 200;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible_combos(problem, config));
}
BENCHMARK(BM_enumerate_combos);

}  // namespace

BENCHMARK_MAIN();
