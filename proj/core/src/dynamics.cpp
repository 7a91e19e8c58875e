#include "netsweep/dynamics.hpp"

#include <algorithm>
#include <deque>

namespace netsweep {

namespace {

// Checks one step's node set; returns a problem description or empty string.
std::string step_problem(const DirectedGraph& g, const SearchStrategy& strategy,
                         const std::vector<NodeId>& step) {
    if (strategy.searchers < 0) return "negative searcher count";
    if (step.size() > static_cast<std::size_t>(strategy.searchers))
        return "step places " + std::to_string(step.size()) + " searchers, budget is " +
               std::to_string(strategy.searchers);
    std::vector<NodeId> sorted(step);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= g.node_count())
            return "node " + std::to_string(sorted[i]) + " out of range";
        if (i > 0 && sorted[i] == sorted[i - 1])
            return "node " + std::to_string(sorted[i]) + " placed twice in one step";
    }
    return {};
}

}  // namespace

ClearanceTrace simulate(const DirectedGraph& g, const SearchStrategy& strategy) {
    const EdgeId m = g.edge_count();
    ClearanceTrace trace;
    trace.step_count = strategy.steps.size();
    trace.cleared_after.assign(m, 0);
    trace.new_nodes_per_step.reserve(strategy.steps.size());
    trace.last_cleared_step.assign(m, 0);
    trace.last_recontaminated_step.assign(m, 0);

    std::vector<char> guarded(g.node_count(), 0);
    std::vector<char> visited(g.node_count(), 0);
    std::vector<char> in_frontier(g.node_count(), 0);
    std::vector<NodeId> parent(g.node_count(), kInvalidNode);
    std::vector<char> cleared(m, 0);

    for (std::size_t si = 0; si < strategy.steps.size(); ++si) {
        const std::vector<NodeId>& step = strategy.steps[si];
        const std::size_t step_no = si + 1;
        if (std::string problem = step_problem(g, strategy, step); !problem.empty())
            throw DomainError("step " + std::to_string(step_no) + ": " + problem);

        std::size_t fresh = 0;
        for (NodeId v : step) {
            guarded[v] = 1;
            if (!visited[v]) {
                visited[v] = 1;
                ++fresh;
            }
        }
        trace.new_nodes_per_step.push_back(fresh);

        StepDelta delta;
        // Both endpoints guarded this step: the edge is (re)cleared.
        for (NodeId u : step) {
            for (NodeId v : g.out_neighbors(u)) {
                if (!guarded[v]) continue;
                EdgeId e = g.edge_id(u, v);
                if (!cleared[e]) {
                    cleared[e] = 1;
                    delta.cleared.push_back(e);
                    trace.last_cleared_step[e] = step_no;
                }
            }
        }
        std::sort(delta.cleared.begin(), delta.cleared.end());

        // Instantaneous recontamination: repeatedly contaminate every cleared
        // edge whose tail is reachable, avoiding guards, from the head of a
        // contaminated edge. New contamination cannot enlarge the reachable
        // set (the freed head is already in it), so this settles immediately;
        // the loop re-checks until a pass removes nothing.
        while (true) {
            std::deque<NodeId> queue;
            std::fill(in_frontier.begin(), in_frontier.end(), 0);
            for (EdgeId e = 0; e < m; ++e) {
                if (cleared[e]) continue;
                NodeId head = g.edge(e).to;
                if (!guarded[head] && !in_frontier[head]) {
                    in_frontier[head] = 1;
                    parent[head] = kInvalidNode;
                    queue.push_back(head);
                }
            }
            while (!queue.empty()) {
                NodeId u = queue.front();
                queue.pop_front();
                for (NodeId v : g.out_neighbors(u)) {
                    if (guarded[v] || in_frontier[v]) continue;
                    in_frontier[v] = 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
            std::vector<EdgeId> removed;
            for (EdgeId e = 0; e < m; ++e) {
                if (!cleared[e]) continue;
                NodeId tail = g.edge(e).from;
                if (!in_frontier[tail]) continue;
                cleared[e] = 0;
                removed.push_back(e);
                trace.last_recontaminated_step[e] = step_no;

                RecontaminationEvent event;
                event.edge = e;
                event.step = step_no;
                for (NodeId v = tail; v != kInvalidNode; v = parent[v]) event.witness.push_back(v);
                std::reverse(event.witness.begin(), event.witness.end());
                trace.events.push_back(std::move(event));
            }
            if (removed.empty()) break;
            delta.recontaminated.insert(delta.recontaminated.end(), removed.begin(), removed.end());
        }
        std::sort(delta.recontaminated.begin(), delta.recontaminated.end());
        trace.deltas.push_back(std::move(delta));

        for (NodeId v : step) guarded[v] = 0;
    }

    trace.final_cleared = std::all_of(cleared.begin(), cleared.end(), [](char c) { return c != 0; });
    for (EdgeId e = 0; e < m; ++e) trace.cleared_after[e] = cleared[e];
    return trace;
}

ValidationReport validate(const DirectedGraph& g, const SearchStrategy& strategy) {
    ValidationReport report;
    for (std::size_t si = 0; si < strategy.steps.size(); ++si) {
        if (std::string problem = step_problem(g, strategy, strategy.steps[si]); !problem.empty()) {
            report.width_ok = false;
            report.violating_step = si + 1;
            report.message = "step " + std::to_string(si + 1) + ": " + problem;
            return report;
        }
    }

    ClearanceTrace trace = simulate(g, strategy);
    if (trace.final_cleared) {
        report.ok = true;
        report.message = "all edges cleared in " + std::to_string(strategy.steps.size()) + " steps";
        return report;
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (trace.cleared_after[e]) continue;
        report.offending_edge = e;
        break;
    }
    // If the edge was ever lost again, surface the path that lost it last.
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        if (it->edge != report.offending_edge) continue;
        report.violating_step = it->step;
        report.witness = it->witness;
        break;
    }
    Edge bad = g.edge(report.offending_edge);
    report.message = "edge " + std::to_string(bad.from) + " -> " + std::to_string(bad.to) +
                     (report.violating_step
                          ? " recontaminated at step " + std::to_string(report.violating_step)
                          : " never cleared");
    return report;
}

void apply_recontamination(const DirectedGraph& g, const std::vector<char>& guarded,
                           std::vector<char>& cleared) {
    const EdgeId m = g.edge_count();
    std::vector<char> in_frontier(g.node_count(), 0);
    while (true) {
        // Nodes reachable from the head of any contaminated edge without
        // crossing a guard; edges whose tails they reach are lost.
        std::fill(in_frontier.begin(), in_frontier.end(), 0);
        std::deque<NodeId> queue;
        for (EdgeId e = 0; e < m; ++e) {
            if (cleared[e]) continue;
            NodeId head = g.edge(e).to;
            if (!guarded[head] && !in_frontier[head]) {
                in_frontier[head] = 1;
                queue.push_back(head);
            }
        }
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (NodeId v : g.out_neighbors(u)) {
                if (guarded[v] || in_frontier[v]) continue;
                in_frontier[v] = 1;
                queue.push_back(v);
            }
        }
        bool removed = false;
        for (EdgeId e = 0; e < m; ++e) {
            if (cleared[e] && in_frontier[g.edge(e).from]) {
                cleared[e] = 0;
                removed = true;
            }
        }
        if (!removed) break;
    }
}

long long ceil_div(long long a, long long b) {
    // b > 0 everywhere this is used; round towards +infinity.
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

long long lower_bound(long long n, int s) {
    if (s < 2) throw DomainError("need at least 2 searchers, got " + std::to_string(s));
    if (n < 1) throw DomainError("need at least 1 node, got " + std::to_string(n));
    return std::max<long long>(1, ceil_div(n - s, s - 1) + 1);
}

LossReport loss_of(const ClearanceTrace& trace, const SearchStrategy& strategy, NodeId n) {
    const int s = strategy.searchers;
    if (s < 2) throw DomainError("need at least 2 searchers, got " + std::to_string(s));
    if (!trace.final_cleared)
        throw DomainError("loss is only defined for strategies that clear every edge");
    const std::size_t t = trace.new_nodes_per_step.size();

    LossReport report;
    // The final step only retires searchers, so it carries no loss; count
    // 1-based steps 1 .. t-1.
    for (std::size_t i = 1; i < t; ++i) {
        long long fresh = static_cast<long long>(trace.new_nodes_per_step[i - 1]);
        long long capacity = (i == 1) ? s : s - 1;
        report.per_step_loss.push_back(std::max<long long>(0, capacity - fresh));
    }
    for (long long l : report.per_step_loss) report.total_loss += l;
    report.predicted_length = ceil_div(static_cast<long long>(n) - s + report.total_loss, s - 1) + 1;
    report.loss_max_bound = ceil_div(static_cast<long long>(n) - s, s - 1) * (s - 1) -
                            (static_cast<long long>(n) - s);
    return report;
}

}  // namespace netsweep
