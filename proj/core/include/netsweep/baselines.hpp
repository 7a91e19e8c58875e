// Reference points to compare the main strategies against: an exact
// state-space search for the optimal number of steps on tiny graphs, and a
// simple baseline that walks every chain of the graph with its own pair of
// searchers.
#ifndef NETSWEEP_BASELINES_HPP
#define NETSWEEP_BASELINES_HPP

#include <cstddef>

#include "netsweep/graph.hpp"
#include "netsweep/strategy.hpp"

namespace netsweep {

struct OracleResult {
    bool exceeded = false;    // no strategy within max_steps
    long long length = 0;     // optimal step count when !exceeded
    SearchStrategy witness;   // an optimal strategy when !exceeded
    std::size_t explored = 0; // distinct cleared-sets expanded
};

// Breadth-first search over cleared-edge sets: every placement of at most s
// searchers is tried from every reachable set, so the returned length is the
// true optimum. Placements touching no contaminated edge are skipped (they
// can only lose ground). Limited to n <= 12 nodes; throws DomainError beyond
// that or when s < 2.
OracleResult exact_search_time(const DirectedGraph& g, int s, long long max_steps);

// Same answer via iterative deepening over every placement, with no
// dominance pruning -- an independent cross-check for the search above.
// Limited to n <= 7.
OracleResult exact_search_time_iddfs(const DirectedGraph& g, int s, long long max_steps);

// Baseline that clears the graph chain by chain: each step deals a pair of
// searchers to every open chain in ascending head-id order and spends any
// leftover budget deepening the lowest chains. The running cleared set
// follows the step dynamics, so a chain whose edge is lost to
// recontamination rewinds and re-walks it. Validated before return; valid
// but usually longer than the traversal-based strategy. Throws DomainError
// on cyclic input or s < 2 and InternalError should the strategy ever fail
// validation.
SearchStrategy splitting_strategy(const DirectedGraph& g, int s);

}  // namespace netsweep

#endif  // NETSWEEP_BASELINES_HPP
