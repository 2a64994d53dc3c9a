#include <benchmark/benchmark.h>

#include <random>

#include "dirichlet/leader_topology.hpp"
#include "dirichlet/lloyd.hpp"
#include "dirichlet/proximity.hpp"
#include "dirichlet/voronoi.hpp"

namespace {

using namespace dirichlet;

GeneratingSet random_sites(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    GeneratingSet gs;
    gs.sites.reserve(n);
    while (gs.sites.size() < n) {
        const Point p{0.05 + 0.9 * u01(), 0.05 + 0.9 * u01()};
        bool ok = true;
        for (const Point& q : gs.sites) {
            if (distance(p, q) < 1e-5) {
                ok = false;
                break;
            }
        }
        if (ok) gs.sites.push_back(p);
    }
    return gs;
}

const BoundingBox kUnitBox{0.0, 0.0, 1.0, 1.0};

void BM_BuildDiagram(benchmark::State& state) {
    const GeneratingSet gs = random_sites(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_diagram(gs, kUnitBox));
    }
}
BENCHMARK(BM_BuildDiagram)->Arg(16)->Arg(64)->Arg(256);

void BM_ProximityGraph(benchmark::State& state) {
    const GeneratingSet gs = random_sites(static_cast<std::size_t>(state.range(0)), 11);
    const VoronoiDiagram d = build_diagram(gs, kUnitBox);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_proximity_graph(d, d.tolerance));
    }
}
BENCHMARK(BM_ProximityGraph)->Arg(16)->Arg(64);

void BM_CechDistance(benchmark::State& state) {
    const GeneratingSet gs = random_sites(32, 13);
    const VoronoiDiagram d = build_diagram(gs, kUnitBox);
    for (auto _ : state) {
        for (std::size_t i = 1; i < d.cells.size(); ++i) {
            benchmark::DoNotOptimize(cech_distance(d.cells[0], d.cells[i]));
        }
    }
}
BENCHMARK(BM_CechDistance);

void BM_LloydStep(benchmark::State& state) {
    const GeneratingSet gs = random_sites(static_cast<std::size_t>(state.range(0)), 17);
    const double tol = default_tolerance(kUnitBox);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lloyd_step(gs, kUnitBox, nullptr, tol));
    }
}
BENCHMARK(BM_LloydStep)->Arg(16)->Arg(64);

void BM_LeaderTopology(benchmark::State& state) {
    const GeneratingSet gs = random_sites(static_cast<std::size_t>(state.range(0)), 19);
    const VoronoiDiagram d = build_diagram(gs, kUnitBox);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_leader_topology(d, d.tolerance));
    }
}
BENCHMARK(BM_LeaderTopology)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
