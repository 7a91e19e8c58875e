// Contamination dynamics: step-by-step clearance simulation with
// instantaneous recontamination, strategy validation, the searcher-count
// lower bound and the loss calculus that predicts strategy length.
#ifndef NETSWEEP_DYNAMICS_HPP
#define NETSWEEP_DYNAMICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "netsweep/graph.hpp"
#include "netsweep/strategy.hpp"

namespace netsweep {

// A cleared edge that became contaminated again: at `step` there was a
// directed path, avoiding that step's guards, from the head of a
// contaminated edge to the edge's tail. `witness` lists that path's nodes
// (seed first, tail last).
struct RecontaminationEvent {
    EdgeId edge = kInvalidEdge;
    std::size_t step = 0;  // 1-based
    std::vector<NodeId> witness;
};

struct StepDelta {
    std::vector<EdgeId> cleared;         // edges newly cleared this step, ascending
    std::vector<EdgeId> recontaminated;  // edges lost this step, ascending
};

struct ClearanceTrace {
    std::size_t step_count = 0;
    bool final_cleared = false;               // every edge cleared after the last step
    std::vector<char> cleared_after;          // per edge, final cleared state
    std::vector<StepDelta> deltas;            // one per step
    std::vector<std::size_t> new_nodes_per_step;  // first-time visits per step
    std::vector<RecontaminationEvent> events;
    // Per edge: most recent step that cleared / recontaminated it (0 = never).
    // A finally-cleared edge is stably cleared from last_cleared_step on.
    std::vector<std::size_t> last_cleared_step;
    std::vector<std::size_t> last_recontaminated_step;
};

// Plays a strategy against the graph. Each step guards exactly the step's
// node set W: edges with both endpoints in W become cleared, then every
// cleared edge whose tail is reachable from the head of a contaminated edge
// along a directed path avoiding W is contaminated again (evaluated to a
// fixed point). Throws DomainError when a step exceeds the searcher budget
// or contains out-of-range or duplicate nodes.
ClearanceTrace simulate(const DirectedGraph& g, const SearchStrategy& strategy);

struct ValidationReport {
    bool ok = false;
    bool width_ok = true;              // every step within budget, nodes valid
    std::size_t violating_step = 0;    // 1-based step of the first problem, 0 = none
    EdgeId offending_edge = kInvalidEdge;  // an edge left contaminated at the end
    std::vector<NodeId> witness;       // unguarded path behind its last recontamination
    std::string message;
};

// Never throws on bad strategies: malformed steps yield width_ok=false and
// a simulation that leaves edges contaminated yields diagnostics. ok is true
// exactly when the steps are well formed and every edge ends cleared.
ValidationReport validate(const DirectedGraph& g, const SearchStrategy& strategy);

// Applies the recontamination rule once guards sit on `guarded` nodes: every
// cleared edge whose tail is reachable from the head of a contaminated edge
// through unguarded nodes becomes contaminated again, repeated to a fixed
// point. Strategy constructors share this so their running cleared sets stay
// aligned with what simulate() will conclude.
void apply_recontamination(const DirectedGraph& g, const std::vector<char>& guarded,
                           std::vector<char>& cleared);

// Ceiling division for positive divisors, exact for negative numerators.
long long ceil_div(long long a, long long b);

// Fewest steps any s-searcher strategy can take on a connected n-node
// network: max(1, ceil((n - s) / (s - 1)) + 1). Throws DomainError when
// s < 2 or n < 1.
long long lower_bound(long long n, int s);

struct LossReport {
    std::vector<long long> per_step_loss;  // steps 1 .. t-1 (final step excluded)
    long long total_loss = 0;
    long long predicted_length = 0;  // ceil((n - s + total_loss) / (s - 1)) + 1
    long long loss_max_bound = 0;    // largest total loss that keeps the length minimal
};

// Loss calculus over the first-visit counts of a played strategy: step 1
// loses max(0, s - new_1), every later non-final step i loses
// max(0, (s - 1) - new_i). Throws DomainError when searchers < 2 or when
// the trace did not end with every edge cleared.
LossReport loss_of(const ClearanceTrace& trace, const SearchStrategy& strategy, NodeId n);

}  // namespace netsweep

#endif  // NETSWEEP_DYNAMICS_HPP
