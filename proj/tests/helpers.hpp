// Shared fixtures and reference implementations for the test suite. The
// ref_* functions are deliberately independent re-implementations (sets and
// quadratic scans instead of CSR walks) so the library and the tests can
// only agree by computing the same mathematical object.
#ifndef NETSWEEP_TESTS_HELPERS_HPP
#define NETSWEEP_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netsweep/graph.hpp"
#include "netsweep/strategy.hpp"

namespace netsweep::testing {

using LabelEdge = std::pair<std::int64_t, std::int64_t>;

DirectedGraph make_graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

struct LabeledGraph {
    DirectedGraph graph;
    NodeIdMap ids;
};

// Interns labels in first-appearance order, exactly like the edge-list loader.
LabeledGraph from_labeled_edges(const std::vector<LabelEdge>& edges);

// The nine-node worked example used across the whole suite: labels 1..9 with
// edges 1->2, 2->4, 3->4, 4->5, 5->8, 4->6, 6->7, 7->8, 7->9.
LabeledGraph nine_node_example();
const std::vector<LabelEdge>& nine_node_edges();

std::vector<LabelEdge> to_labels(const std::vector<Edge>& edges, const NodeIdMap& ids);
std::vector<std::vector<std::int64_t>> steps_to_labels(
    const std::vector<std::vector<NodeId>>& steps, const NodeIdMap& ids);

// Writes the lines to a fresh file under the system temp directory and
// returns its path. Files pile up per process; the OS cleans the directory.
std::string write_temp_file(const std::string& stem, const std::string& contents);
std::string temp_path(const std::string& stem);

// ---------------------------------------------------------------------------
// Reference contamination dynamics, straight from the definition: a cleared
// edge is lost again whenever some contaminated edge's head reaches its tail
// along a directed path that avoids every guard of the step.
// ---------------------------------------------------------------------------

using EdgeSet = std::set<std::pair<NodeId, NodeId>>;

// One guarded step applied to the currently cleared set.
EdgeSet ref_step(const DirectedGraph& g, const EdgeSet& cleared, const std::vector<NodeId>& guards);

struct RefTrace {
    bool final_cleared = false;
    std::vector<EdgeSet> cleared_after;  // one entry per step
};
RefTrace ref_simulate(const DirectedGraph& g, const std::vector<std::vector<NodeId>>& steps);

// ---------------------------------------------------------------------------
// Structural reference checks.
// ---------------------------------------------------------------------------

bool ref_is_acyclic(const DirectedGraph& g);        // three-colour DFS
bool ref_weakly_connected(const DirectedGraph& g);  // union-find
// Quadratic Kahn with a min-id scan per round; empty when cyclic.
std::vector<NodeId> ref_kahn(const DirectedGraph& g);
// Least t >= 1 with s + (t - 1) * (s - 1) >= n: the step count below which
// the visited nodes cannot cover the graph.
long long ref_lower_bound(long long n, int s);

// ---------------------------------------------------------------------------
// Random instances.
// ---------------------------------------------------------------------------

// Every pair i < j becomes an edge i -> j with probability p.
DirectedGraph random_dag(NodeId n, double p, std::mt19937_64& rng);
// Every ordered pair u != v becomes an edge with probability p.
DirectedGraph random_digraph(NodeId n, double p, std::mt19937_64& rng);
// random_dag resampled until weakly connected (and, when max_m > 0, until
// the edge count stays within max_m).
DirectedGraph random_connected_dag(NodeId n, double p, std::mt19937_64& rng, EdgeId max_m = 0);
// Random guard placements: t steps of 1..s distinct nodes each.
std::vector<std::vector<NodeId>> random_steps(NodeId n, int s, int t, std::mt19937_64& rng);

}  // namespace netsweep::testing

#endif  // NETSWEEP_TESTS_HELPERS_HPP
