#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tqcube/broadcast.hpp"
#include "tqcube/construction.hpp"
#include "tqcube/verification.hpp"

using namespace tqcube;

namespace {

std::vector<NodeLabel> random_labels(Dimension n, std::size_t count) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<NodeLabel> dist(0, n.node_count() - 1);
    std::vector<NodeLabel> labels(count);
    for (NodeLabel& b : labels) {
        b = dist(rng);
    }
    return labels;
}

void BM_neighbors(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    const auto labels = random_labels(n, 1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(neighbors(labels[i++ & 1023], n));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_is_adjacent(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    const auto labels = random_labels(n, 2048);
    std::size_t i = 0;
    for (auto _ : state) {
        const NodeLabel u = labels[i & 2047];
        const NodeLabel v = labels[(i + 1) & 2047];
        ++i;
        benchmark::DoNotOptimize(is_adjacent(u, v, n));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_edh_paths(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(edh_paths(n));
    }
    state.SetItemsProcessed(state.iterations() * n.node_count());
}

void BM_path_stream_walk(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PathStream stream(n, PairKind::edge_disjoint_hamiltonian, PathId::P);
        std::uint64_t sum = 0;
        while (const auto b = stream.next()) {
            sum += *b;
        }
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * n.node_count());
}

void BM_verify_hamiltonian_cycle(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    const CyclePair pair = edh_cycles(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_hamiltonian_cycle(pair.p));
    }
    state.SetItemsProcessed(state.iterations() * n.node_count());
}

void BM_simulate_broadcast(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    const CyclePair pair = edh_cycles(n);
    const std::vector<RingSchedule> schedules = {
        RingSchedule{pair.p, RingDirection::forward, MessageShare::half},
        RingSchedule{pair.q, RingDirection::forward, MessageShare::half},
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_all_to_all(schedules));
    }
}

}  // namespace

BENCHMARK(BM_neighbors)->Arg(9)->Arg(15)->Arg(31)->Arg(61);
BENCHMARK(BM_is_adjacent)->Arg(9)->Arg(15)->Arg(31)->Arg(61);
BENCHMARK(BM_edh_paths)->Arg(9)->Arg(11)->Arg(13)->Arg(15);
BENCHMARK(BM_path_stream_walk)->Arg(9)->Arg(11)->Arg(13)->Arg(15);
BENCHMARK(BM_verify_hamiltonian_cycle)->Arg(11)->Arg(15);
BENCHMARK(BM_simulate_broadcast)->Arg(7)->Arg(9)->Arg(11);

BENCHMARK_MAIN();
