// Microbenchmarks for the hot paths: traversal + strategy construction,
// strategy validation, cycle-cover computation, and decomposition.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "netsweep/decomposition.hpp"
#include "netsweep/dynamics.hpp"
#include "netsweep/generators.hpp"
#include "netsweep/graph.hpp"
#include "netsweep/plank.hpp"
#include "netsweep/reduction.hpp"

using namespace netsweep;

namespace {

// Preferential-attachment DAG: generation is O(m), cheap enough for setup.
DirectedGraph bench_dag(NodeId n) { return gen_ba_dag(n, 2, 2, 42); }

// The same DAG with every tenth edge mirrored, which plants plenty of
// two-cycles for the feedback-arc benchmarks.
DirectedGraph bench_digraph(NodeId n) {
    DirectedGraph dag = bench_dag(n);
    std::vector<Edge> edges = dag.edges();
    std::size_t m = edges.size();
    for (std::size_t e = 0; e < m; e += 10) edges.push_back({edges[e].to, edges[e].from});
    return DirectedGraph::from_edges(n, std::move(edges));
}

void BM_Plank(benchmark::State& state) {
    DirectedGraph g = bench_dag(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        SearchStrategy sigma = plank(g, 50);
        benchmark::DoNotOptimize(sigma.steps.size());
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Plank)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Validate(benchmark::State& state) {
    DirectedGraph g = bench_dag(static_cast<NodeId>(state.range(0)));
    SearchStrategy sigma = plank(g, 50);
    for (auto _ : state) {
        ValidationReport report = validate(g, sigma);
        benchmark::DoNotOptimize(report.ok);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Validate)->Arg(1000)->Arg(10000);

void BM_FeedbackArcSet(benchmark::State& state) {
    DirectedGraph g = bench_digraph(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        FeedbackArcResult result = feedback_arc_set(g);
        benchmark::DoNotOptimize(result.arcs.size());
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_FeedbackArcSet)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Decompose(benchmark::State& state) {
    DirectedGraph g = bench_dag(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        Decomposition d = decompose(g);
        benchmark::DoNotOptimize(d.sections.size());
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Decompose)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SearchDigraph(benchmark::State& state) {
    DirectedGraph g = bench_digraph(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        SearchOutcome outcome = search_digraph(g, 50, 0);
        benchmark::DoNotOptimize(outcome.schedule.peak_concurrent);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_SearchDigraph)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
