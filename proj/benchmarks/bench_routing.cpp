#include <benchmark/benchmark.h>

#include "uavsim/rng.hpp"
#include "uavsim/routing.hpp"

using namespace uavsim;

namespace {

std::vector<UavNode> ring_of_uavs(int count) {
    Rng rng(7);
    std::vector<UavNode> uavs;
    for (int i = 0; i < count; ++i) {
        UavNode u;
        u.id = i;
        u.x = rng.uniform_double(-200, 200);
        u.y = rng.uniform_double(-200, 200);
        u.altitude = 90.0;
        u.load = rng.uniform_int(0, 200) * kTrafficScale;
        u.role = i == 0 ? UavRole::Root : UavRole::Serving;
        uavs.push_back(u);
    }
    return uavs;
}

}  // namespace

static void BM_BuildGraph(benchmark::State& state) {
    const SimConfig cfg;
    const auto uavs = ring_of_uavs(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(uavs, cfg));
}
BENCHMARK(BM_BuildGraph)->Arg(8)->Arg(32)->Arg(128);

static void BM_DijkstraTree(benchmark::State& state) {
    const SimConfig cfg;
    const auto uavs = ring_of_uavs(static_cast<int>(state.range(0)));
    const auto graph = build_graph(uavs, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(dijkstra_tree(graph));
}
BENCHMARK(BM_DijkstraTree)->Arg(8)->Arg(32)->Arg(128);
