// Step strategies for acyclic graphs: a modified depth-first traversal that
// enters a node only after all its in-edges are explored, and a constructor
// that walks the resulting edge order with a bounded crew of searchers.
// search_digraph chains the cycle-removal reduction in front so arbitrary
// digraphs can be cleared.
#ifndef NETSWEEP_PLANK_HPP
#define NETSWEEP_PLANK_HPP

#include <vector>

#include "netsweep/dynamics.hpp"
#include "netsweep/graph.hpp"
#include "netsweep/reduction.hpp"
#include "netsweep/strategy.hpp"

namespace netsweep {

// Modified depth-first edge order: starts from the smallest-id node whose
// in-edges are all explored (initially the smallest source), explores
// out-edges ascending, and descends into a target only once its last in-edge
// was just explored; restarts from the next eligible node until every edge
// appears exactly once. Throws DomainError on cyclic input.
std::vector<Edge> mdfs(const DirectedGraph& g);

// Turns an edge order into placement steps for s >= 2 searchers: each step
// accumulates the endpoints of the next edges (tail before head) until all s
// searchers are used, clearing every edge whose endpoints share a step; an
// edge that does not fit completely is retried in the next step. The running
// cleared set follows the game dynamics: an edge swept up ahead of the walk
// and then recontaminated counts as uncleared again, so the walk revisits it.
// Throws DomainError when s < 2 or the order mentions unknown edges.
SearchStrategy construct_strategy(const DirectedGraph& g, const std::vector<Edge>& order, int s);

// construct_strategy over the mdfs order: the end-to-end strategy for an
// acyclic graph, validated before return. Throws DomainError on cyclic input
// or s < 2, and InternalError should the strategy ever fail validation.
SearchStrategy plank(const DirectedGraph& g, int s);

struct SearchOutcome {
    ReductionPlan plan;           // guards and acyclic remainder
    SearchStrategy dag_strategy;  // steps over plan.dag's node ids
    SearchStrategy strategy;      // steps over g's ids, guards joined into every step
    ValidationReport report;      // strategy checked against g
    SlidingSchedule schedule;     // when each guard is actually needed
};

// Full pipeline for an arbitrary digraph: remove a guard set (cycle cover
// plus optional k-hubset), run plank with s sliding searchers on the
// remainder, place any remainder nodes the traversal never touched in extra
// steps, and keep the guards posted throughout. The combined strategy uses
// s + |guards| searchers. Throws DomainError when s < 2 or the guards
// swallow the whole graph, and InternalError should the combined strategy
// ever fail validation.
SearchOutcome search_digraph(const DirectedGraph& g, int s, int hubset_k);

}  // namespace netsweep

#endif  // NETSWEEP_PLANK_HPP
