#include "netsweep/plank.hpp"

#include <algorithm>
#include <string>

#include "netsweep/dynamics.hpp"

namespace netsweep {

std::vector<Edge> mdfs(const DirectedGraph& g) {
    TopoResult topo = topological_order(g);
    if (!topo.is_dag()) {
        std::string cycle;
        for (NodeId v : topo.cycle) cycle += std::to_string(v) + " -> ";
        cycle += std::to_string(topo.cycle.front());
        throw DomainError("graph is cyclic (" + cycle + "); remove a guard set first");
    }

    const NodeId n = g.node_count();
    std::vector<NodeId> pending_in(n);   // in-edges not yet explored
    std::vector<EdgeId> cursor(n, 0);    // next out-neighbor index to explore
    std::vector<char> on_walk(n, 0);
    for (NodeId v = 0; v < n; ++v) pending_in[v] = g.in_degree(v);

    std::vector<Edge> order;
    order.reserve(g.edge_count());
    std::vector<NodeId> stack;
    NodeId scan = 0;  // eligible starts only ever gain ids >= previous start
    while (true) {
        // Next start: smallest node with no pending in-edge and an
        // unexplored out-edge. Entered nodes are drained completely, so
        // every candidate is a source; sources never regain eligibility,
        // letting the scan resume where it left off.
        while (scan < n && !(pending_in[scan] == 0 && cursor[scan] < g.out_degree(scan) &&
                             !on_walk[scan]))
            ++scan;
        if (scan == n) break;
        stack.assign(1, scan);
        on_walk[scan] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            if (cursor[u] == g.out_degree(u)) {
                stack.pop_back();
                continue;
            }
            NodeId v = g.out_neighbors(u)[cursor[u]++];
            order.push_back({u, v});
            if (--pending_in[v] == 0 && !on_walk[v]) {
                on_walk[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return order;
}

SearchStrategy construct_strategy(const DirectedGraph& g, const std::vector<Edge>& order, int s) {
    if (s < 2) throw DomainError("need at least 2 searchers, got " + std::to_string(s));

    std::vector<char> cleared(g.edge_count(), 0);
    for (const Edge& e : order)
        if (g.edge_id(e.from, e.to) == kInvalidEdge)
            throw DomainError("edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                              " not in graph");

    SearchStrategy strategy;
    strategy.searchers = s;
    std::vector<NodeId> step;  // insertion order is the placement order
    std::vector<char> in_step(g.node_count(), 0);

    auto close_step = [&]() {
        // Any edge whose endpoints ended up sharing this step is cleared,
        // walked or not.
        for (NodeId u : step)
            for (NodeId v : g.out_neighbors(u))
                if (in_step[v]) cleared[g.edge_id(u, v)] = 1;
        // An edge swept up that way ahead of the walk can be lost again once
        // its endpoints are released while an in-edge of its tail is still
        // contaminated; mirror the game's recontamination here so the walk
        // revisits such edges instead of skipping them as cleared.
        apply_recontamination(g, in_step, cleared);
        for (NodeId u : step) in_step[u] = 0;
        strategy.steps.push_back(std::move(step));
        step.clear();
    };

    std::size_t i = 0;
    while (i < order.size()) {
        const Edge e = order[i];
        if (cleared[g.edge_id(e.from, e.to)]) {
            ++i;
            continue;
        }
        if (!in_step[e.from]) {
            if (step.size() == static_cast<std::size_t>(s)) {
                close_step();
                continue;  // retry the edge with a fresh crew
            }
            in_step[e.from] = 1;
            step.push_back(e.from);
        }
        if (!in_step[e.to]) {
            if (step.size() == static_cast<std::size_t>(s)) {
                close_step();
                continue;
            }
            in_step[e.to] = 1;
            step.push_back(e.to);
        }
        cleared[g.edge_id(e.from, e.to)] = 1;
        ++i;
    }
    if (!step.empty()) close_step();
    return strategy;
}

SearchStrategy plank(const DirectedGraph& g, int s) {
    SearchStrategy strategy = construct_strategy(g, mdfs(g), s);
    if (ValidationReport report = validate(g, strategy); !report.ok)
        throw InternalError("constructed strategy failed validation: " + report.message);
    return strategy;
}

SearchOutcome search_digraph(const DirectedGraph& g, int s, int hubset_k) {
    if (s < 2) throw DomainError("need at least 2 sliding searchers, got " + std::to_string(s));

    SearchOutcome outcome;
    outcome.plan = build_reduction(g, hubset_k);
    outcome.dag_strategy = plank(outcome.plan.dag, s);

    // Remainder nodes the traversal never placed (isolated inside the dag
    // but attached to guards in g) still need a visit to clear their guard
    // edges; pack them into extra steps, ascending, s per step.
    std::vector<char> placed(outcome.plan.dag.node_count(), 0);
    for (const auto& step : outcome.dag_strategy.steps)
        for (NodeId v : step) placed[v] = 1;
    std::vector<NodeId> leftover;
    for (NodeId v = 0; v < outcome.plan.dag.node_count(); ++v)
        if (!placed[v]) leftover.push_back(v);
    for (std::size_t i = 0; i < leftover.size(); i += s) {
        std::vector<NodeId> step(leftover.begin() + i,
                                 leftover.begin() + std::min(leftover.size(), i + s));
        outcome.dag_strategy.steps.push_back(std::move(step));
    }

    outcome.strategy.searchers = s + static_cast<int>(outcome.plan.guards.size());
    outcome.strategy.steps.reserve(outcome.dag_strategy.steps.size());
    for (const auto& step : outcome.dag_strategy.steps) {
        std::vector<NodeId> combined(outcome.plan.guards);
        for (NodeId v : step) combined.push_back(outcome.plan.dag_to_g[v]);
        outcome.strategy.steps.push_back(std::move(combined));
    }

    outcome.report = validate(g, outcome.strategy);
    if (!outcome.report.ok)
        throw InternalError("combined strategy failed validation: " + outcome.report.message);
    outcome.schedule = sliding_schedule(g, outcome.strategy, outcome.plan.guards);
    return outcome;
}

}  // namespace netsweep
