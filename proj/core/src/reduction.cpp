#include "netsweep/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace netsweep {

FeedbackArcResult feedback_arc_set(const DirectedGraph& g) {
    const NodeId n = g.node_count();
    FeedbackArcResult result;
    if (n == 0) return result;

    std::vector<long long> outd(n), ind(n);
    for (NodeId v = 0; v < n; ++v) {
        outd[v] = g.out_degree(v);
        ind[v] = g.in_degree(v);
    }
    std::vector<char> placed(n, 0);

    using MinIdQueue = std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>>;
    MinIdQueue sinks, sources;
    auto delta_less = [](const std::pair<long long, NodeId>& a,
                         const std::pair<long long, NodeId>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;  // larger delta first, then smaller id
    };
    std::priority_queue<std::pair<long long, NodeId>, std::vector<std::pair<long long, NodeId>>,
                        decltype(delta_less)>
        by_delta(delta_less);

    // Queues are lazy: nodes are re-pushed whenever their degrees change and
    // entries are re-checked against current degrees when popped.
    auto enqueue = [&](NodeId v) {
        if (outd[v] == 0)
            sinks.push(v);
        else if (ind[v] == 0)
            sources.push(v);
        by_delta.push({outd[v] - ind[v], v});
    };
    for (NodeId v = 0; v < n; ++v) enqueue(v);

    std::vector<NodeId> prefix, suffix;
    std::size_t remaining = n;
    while (remaining > 0) {
        NodeId pick = kInvalidNode;
        bool to_suffix = false;
        while (!sinks.empty()) {
            NodeId v = sinks.top();
            sinks.pop();
            if (placed[v] || outd[v] != 0) continue;
            pick = v;
            to_suffix = true;
            break;
        }
        if (pick == kInvalidNode) {
            while (!sources.empty()) {
                NodeId v = sources.top();
                sources.pop();
                if (placed[v] || ind[v] != 0 || outd[v] == 0) continue;
                pick = v;
                break;
            }
        }
        if (pick == kInvalidNode) {
            while (!by_delta.empty()) {
                auto [d, v] = by_delta.top();
                by_delta.pop();
                if (placed[v] || d != outd[v] - ind[v]) continue;
                pick = v;
                break;
            }
        }

        placed[pick] = 1;
        --remaining;
        for (NodeId v : g.out_neighbors(pick))
            if (!placed[v]) {
                --ind[v];
                enqueue(v);
            }
        for (NodeId v : g.in_neighbors(pick))
            if (!placed[v]) {
                --outd[v];
                enqueue(v);
            }
        (to_suffix ? suffix : prefix).push_back(pick);
    }

    result.order = std::move(prefix);
    result.order.insert(result.order.end(), suffix.rbegin(), suffix.rend());

    std::vector<NodeId> position(n);
    for (NodeId i = 0; i < n; ++i) position[result.order[i]] = i;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Edge ed = g.edge(e);
        if (position[ed.from] > position[ed.to]) result.arcs.push_back(ed);
    }
    // Edge-id order is (from, to) order already.
    return result;
}

std::vector<NodeId> fvs_from_fas(const std::vector<Edge>& arcs) {
    std::vector<Edge> sorted(arcs);
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return a.from < b.from || (a.from == b.from && a.to < b.to);
    });
    std::unordered_set<NodeId> chosen;
    for (const Edge& arc : sorted) {
        if (chosen.count(arc.to)) continue;  // head already guards this arc
        chosen.insert(arc.from);
    }
    std::vector<NodeId> result(chosen.begin(), chosen.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<NodeId> k_hubset(const DirectedGraph& g, int k) {
    if (k < 0) throw DomainError("hubset size must be non-negative, got " + std::to_string(k));
    const NodeId n = g.node_count();
    std::vector<NodeId> nodes(n);
    for (NodeId v = 0; v < n; ++v) nodes[v] = v;
    std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
        NodeId da = g.out_degree(a) + g.in_degree(a);
        NodeId db = g.out_degree(b) + g.in_degree(b);
        return da > db || (da == db && a < b);
    });
    nodes.resize(std::min<std::size_t>(static_cast<std::size_t>(k), n));
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

ReductionPlan build_reduction(const DirectedGraph& g, int hubset_k) {
    ReductionPlan plan;
    plan.cycle_cover = fvs_from_fas(feedback_arc_set(g).arcs);
    plan.hubs = k_hubset(g, hubset_k);
    plan.hubset_k = hubset_k;
    plan.guards.reserve(plan.cycle_cover.size() + plan.hubs.size());
    std::set_union(plan.cycle_cover.begin(), plan.cycle_cover.end(), plan.hubs.begin(),
                   plan.hubs.end(), std::back_inserter(plan.guards));

    SubgraphResult sub = induced_subgraph(g, plan.guards);
    plan.dag = std::move(sub.graph);
    plan.dag_to_g = std::move(sub.to_parent);
    plan.g_to_dag = std::move(sub.from_parent);
    if (!topological_order(plan.dag).is_dag())
        throw Error("internal error: graph still cyclic after guard removal");
    plan.guard_fraction =
        g.node_count() ? static_cast<double>(plan.guards.size()) / g.node_count() : 0.0;
    return plan;
}

void write_plan(const ReductionPlan& plan, const DirectedGraph& g, const NodeIdMap& ids,
                const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "n=" << g.node_count() << " m=" << g.edge_count() << " p=" << plan.guards.size()
        << " k=" << plan.hubset_k << '\n';
    std::vector<std::int64_t> labels;
    labels.reserve(plan.guards.size());
    for (NodeId v : plan.guards) labels.push_back(ids.external(v));
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
    out << '\n';
    if (!out) throw Error("write failure on " + path);
}

PlanHeader read_plan(const std::string& path, const NodeIdMap& ids) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw ParseError(path + ":1: missing header");
    PlanHeader ph;
    unsigned long long n = 0, m = 0, p = 0;
    int k = 0;
    if (std::sscanf(header.c_str(), "n=%llu m=%llu p=%llu k=%d", &n, &m, &p, &k) != 4)
        throw ParseError(path + ":1: expected header \"n=.. m=.. p=.. k=..\"");
    ph.n = static_cast<NodeId>(n);
    ph.m = static_cast<EdgeId>(m);
    ph.hubset_k = k;
    std::int64_t label;
    while (in >> label) ph.guards.push_back(ids.internal(label));
    if (ph.guards.size() != p)
        throw ParseError(path + ": header declares " + std::to_string(p) + " guards, found " +
                         std::to_string(ph.guards.size()));
    std::sort(ph.guards.begin(), ph.guards.end());
    return ph;
}

SlidingSchedule sliding_schedule(const DirectedGraph& g, const SearchStrategy& strategy,
                                 const std::vector<NodeId>& guards) {
    SlidingSchedule schedule;
    schedule.guards = guards;
    std::sort(schedule.guards.begin(), schedule.guards.end());
    schedule.guards.erase(std::unique(schedule.guards.begin(), schedule.guards.end()),
                          schedule.guards.end());
    for (NodeId v : schedule.guards)
        if (v >= g.node_count())
            throw DomainError("guard " + std::to_string(v) + " out of range");
    if (schedule.guards.size() > static_cast<std::size_t>(std::max(0, strategy.searchers)))
        throw DomainError("more guards than searchers");

    ClearanceTrace trace = simulate(g, strategy);
    if (!trace.final_cleared)
        throw DomainError("strategy leaves edges contaminated; no schedule exists");

    const std::size_t t = strategy.steps.size();
    std::vector<char> is_guard(g.node_count(), 0);
    std::vector<std::size_t> guard_index(g.node_count(), 0);
    for (std::size_t i = 0; i < schedule.guards.size(); ++i) {
        is_guard[schedule.guards[i]] = 1;
        guard_index[schedule.guards[i]] = i;
    }

    std::vector<std::size_t> first_visit(g.node_count(), 0);  // 1-based, 0 = never
    for (std::size_t si = 0; si < t; ++si)
        for (NodeId v : strategy.steps[si])
            if (!is_guard[v] && first_visit[v] == 0) first_visit[v] = si + 1;

    // A guard is done once each incident edge has reached its final clearing.
    schedule.deactivation.assign(schedule.guards.size(), 0);
    for (std::size_t i = 0; i < schedule.guards.size(); ++i) {
        NodeId v = schedule.guards[i];
        std::size_t done = 0;
        for (NodeId w : g.out_neighbors(v))
            done = std::max(done, trace.last_cleared_step[g.edge_id(v, w)]);
        for (NodeId w : g.in_neighbors(v))
            done = std::max(done, trace.last_cleared_step[g.edge_id(w, v)]);
        schedule.deactivation[i] = done;
    }

    // Guards adjacent to one another protect each other's edges, so a whole
    // cluster is posted when the traversal first reaches any of its non-guard
    // neighborhoods.
    std::vector<int> cluster(schedule.guards.size(), -1);
    int cluster_count = 0;
    for (std::size_t i = 0; i < schedule.guards.size(); ++i) {
        if (cluster[i] != -1) continue;
        int c = cluster_count++;
        std::vector<std::size_t> stack{i};
        cluster[i] = c;
        while (!stack.empty()) {
            NodeId v = schedule.guards[stack.back()];
            stack.pop_back();
            auto visit = [&](NodeId w) {
                if (!is_guard[w]) return;
                std::size_t j = guard_index[w];
                if (cluster[j] == -1) {
                    cluster[j] = c;
                    stack.push_back(j);
                }
            };
            for (NodeId w : g.out_neighbors(v)) visit(w);
            for (NodeId w : g.in_neighbors(v)) visit(w);
        }
    }
    std::vector<std::size_t> cluster_first(cluster_count, 0);
    for (std::size_t i = 0; i < schedule.guards.size(); ++i) {
        NodeId v = schedule.guards[i];
        auto consider = [&](NodeId w) {
            if (is_guard[w] || first_visit[w] == 0) return;
            std::size_t& cf = cluster_first[cluster[i]];
            if (cf == 0 || first_visit[w] < cf) cf = first_visit[w];
        };
        for (NodeId w : g.out_neighbors(v)) consider(w);
        for (NodeId w : g.in_neighbors(v)) consider(w);
    }
    schedule.activation.assign(schedule.guards.size(), 0);
    for (std::size_t i = 0; i < schedule.guards.size(); ++i) {
        std::size_t act = cluster_first[cluster[i]];
        if (act == 0) act = schedule.deactivation[i];  // nothing to wait for
        schedule.activation[i] = std::min(act, schedule.deactivation[i]);
    }

    const std::size_t sliding =
        static_cast<std::size_t>(strategy.searchers) - schedule.guards.size();
    std::size_t peak_active = 0;
    for (std::size_t step = 1; step <= t; ++step) {
        std::size_t active = 0;
        for (std::size_t i = 0; i < schedule.guards.size(); ++i)
            if (schedule.activation[i] <= step && step <= schedule.deactivation[i]) ++active;
        peak_active = std::max(peak_active, active);
    }
    schedule.peak_concurrent = peak_active + sliding;
    return schedule;
}

}  // namespace netsweep
