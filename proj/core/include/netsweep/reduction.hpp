// Cycle elimination for general digraphs: a greedy linear arrangement yields
// a feedback arc set, arc sources become permanently guarded nodes, and the
// remainder is an acyclic graph the step strategies can traverse. Also
// computes when each permanent guard is actually needed, so guards can slide
// between posts instead of standing for the whole search.
#ifndef NETSWEEP_REDUCTION_HPP
#define NETSWEEP_REDUCTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "netsweep/dynamics.hpp"
#include "netsweep/graph.hpp"
#include "netsweep/strategy.hpp"

namespace netsweep {

struct FeedbackArcResult {
    std::vector<NodeId> order;  // greedy linear arrangement of all nodes
    std::vector<Edge> arcs;     // edges pointing backwards in it, sorted (from, to)
};

// Greedy arrangement: repeatedly peel sinks (to the suffix) and sources (to
// the prefix), otherwise move the node maximizing out-degree minus in-degree
// to the prefix; ties always break towards the smallest node id. The
// returned arcs are exactly the edges their removal leaves acyclic.
FeedbackArcResult feedback_arc_set(const DirectedGraph& g);

// Covers every arc with a node: scanning arcs in ascending (from, to) order,
// an arc whose head is already chosen is covered, otherwise its tail is
// chosen. Removing the result from g breaks every cycle.
std::vector<NodeId> fvs_from_fas(const std::vector<Edge>& arcs);

// The k nodes of largest total degree (in + out), ties towards smaller ids,
// sorted ascending. k is clamped to the node count; negative k throws.
std::vector<NodeId> k_hubset(const DirectedGraph& g, int k);

struct ReductionPlan {
    std::vector<NodeId> guards;       // nodes held permanently, ascending g ids
    std::vector<NodeId> cycle_cover;  // the fvs_from_fas part of the guards
    std::vector<NodeId> hubs;         // the k_hubset part of the guards
    DirectedGraph dag;                // g minus guards, guaranteed acyclic
    std::vector<NodeId> dag_to_g;     // dag id -> g id
    std::vector<NodeId> g_to_dag;     // g id -> dag id or kInvalidNode
    int hubset_k = 0;
    double guard_fraction = 0.0;      // |guards| / n
};

// guards = fvs_from_fas(feedback_arc_set(g).arcs) united with k_hubset(g, k).
// Throws DomainError when the guards would swallow the whole graph.
ReductionPlan build_reduction(const DirectedGraph& g, int hubset_k);

// Writes "n=<n> m=<m> p=<guards> k=<hubset_k>" then the guard labels,
// ascending, space-separated on one line (empty line when there are none).
void write_plan(const ReductionPlan& plan, const DirectedGraph& g, const NodeIdMap& ids,
                const std::string& path);

struct PlanHeader {
    NodeId n = 0;
    EdgeId m = 0;
    int hubset_k = 0;
    std::vector<NodeId> guards;  // internal ids, ascending
};
PlanHeader read_plan(const std::string& path, const NodeIdMap& ids);

struct SlidingSchedule {
    std::vector<NodeId> guards;               // ascending, aligned with the arrays below
    std::vector<std::size_t> activation;      // 1-based step a guard must be posted by
    std::vector<std::size_t> deactivation;    // 1-based step after which it may leave
    std::size_t peak_concurrent = 0;          // max simultaneously busy searchers
};

// Guards need not stand from step 1: a guard becomes necessary when the
// traversal first touches its surroundings and is done once every incident
// edge is stably cleared. Guards adjacent to each other activate together
// (as the earliest of their cluster). peak_concurrent counts, over steps,
// the active guards plus the strategy's sliding searchers
// (strategy.searchers - |guards|). Throws DomainError when the strategy
// does not clear the graph.
SlidingSchedule sliding_schedule(const DirectedGraph& g, const SearchStrategy& strategy,
                                 const std::vector<NodeId>& guards);

}  // namespace netsweep

#endif  // NETSWEEP_REDUCTION_HPP
