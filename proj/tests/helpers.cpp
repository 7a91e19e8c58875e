#include "helpers.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>

namespace netsweep::testing {

DirectedGraph make_graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (const auto& [u, v] : edges) list.push_back({u, v});
    return DirectedGraph::from_edges(n, std::move(list));
}

LabeledGraph from_labeled_edges(const std::vector<LabelEdge>& edges) {
    NodeIdMap ids;
    std::vector<Edge> internal;
    internal.reserve(edges.size());
    for (const auto& [a, b] : edges) internal.push_back({ids.intern(a), ids.intern(b)});
    return {DirectedGraph::from_edges(ids.size(), std::move(internal)), std::move(ids)};
}

const std::vector<LabelEdge>& nine_node_edges() {
    static const std::vector<LabelEdge> edges = {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {5, 8},
                                                 {4, 6}, {6, 7}, {7, 8}, {7, 9}};
    return edges;
}

LabeledGraph nine_node_example() { return from_labeled_edges(nine_node_edges()); }

std::vector<LabelEdge> to_labels(const std::vector<Edge>& edges, const NodeIdMap& ids) {
    std::vector<LabelEdge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(ids.external(e.from), ids.external(e.to));
    return out;
}

std::vector<std::vector<std::int64_t>> steps_to_labels(
    const std::vector<std::vector<NodeId>>& steps, const NodeIdMap& ids) {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(steps.size());
    for (const auto& step : steps) {
        std::vector<std::int64_t> labels;
        labels.reserve(step.size());
        for (NodeId v : step) labels.push_back(ids.external(v));
        out.push_back(std::move(labels));
    }
    return out;
}

std::string temp_path(const std::string& stem) {
    static std::atomic<unsigned> counter{0};
    const unsigned serial = counter.fetch_add(1);
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    return (dir / ("netsweep_test_" + stem + "_" + std::to_string(serial) + ".txt")).string();
}

std::string write_temp_file(const std::string& stem, const std::string& contents) {
    std::string path = temp_path(stem);
    std::ofstream out(path);
    out << contents;
    return path;
}

namespace {

// Unguarded directed path from `from` to `to`: every node on it, endpoints
// included, must avoid the guard set.
bool unguarded_path(const DirectedGraph& g, NodeId from, NodeId to,
                    const std::set<NodeId>& guards) {
    if (guards.count(from) || guards.count(to)) return false;
    std::vector<char> seen(g.node_count(), 0);
    std::deque<NodeId> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        if (u == to) return true;
        for (NodeId v : g.out_neighbors(u)) {
            if (seen[v] || guards.count(v)) continue;
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    return false;
}

}  // namespace

EdgeSet ref_step(const DirectedGraph& g, const EdgeSet& cleared,
                 const std::vector<NodeId>& guards) {
    const std::set<NodeId> guard_set(guards.begin(), guards.end());
    EdgeSet all;
    for (const Edge& e : g.edges()) all.insert({e.from, e.to});

    EdgeSet next = cleared;
    for (const auto& e : all)
        if (guard_set.count(e.first) && guard_set.count(e.second)) next.insert(e);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : EdgeSet(next)) {
            if (guard_set.count(e.first) && guard_set.count(e.second)) continue;
            bool lost = false;
            for (const auto& dirty : all) {
                if (next.count(dirty)) continue;
                if (unguarded_path(g, dirty.second, e.first, guard_set)) {
                    lost = true;
                    break;
                }
            }
            if (lost) {
                next.erase(e);
                changed = true;
            }
        }
    }
    return next;
}

RefTrace ref_simulate(const DirectedGraph& g, const std::vector<std::vector<NodeId>>& steps) {
    RefTrace trace;
    EdgeSet cleared;
    for (const auto& step : steps) {
        cleared = ref_step(g, cleared, step);
        trace.cleared_after.push_back(cleared);
    }
    trace.final_cleared = cleared.size() == g.edge_count();
    return trace;
}

bool ref_is_acyclic(const DirectedGraph& g) {
    enum { White, Grey, Black };
    std::vector<int> colour(g.node_count(), White);
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (colour[start] != White) continue;
        colour[start] = Grey;
        stack.push_back({start, 0});
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            auto out = g.out_neighbors(u);
            if (next == out.size()) {
                colour[u] = Black;
                stack.pop_back();
                continue;
            }
            NodeId v = out[next++];
            if (colour[v] == Grey) return false;
            if (colour[v] == White) {
                colour[v] = Grey;
                stack.push_back({v, 0});
            }
        }
    }
    return true;
}

bool ref_weakly_connected(const DirectedGraph& g) {
    if (g.node_count() == 0) return false;
    std::vector<NodeId> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) parent[find(e.from)] = find(e.to);
    NodeId root = find(0);
    for (NodeId v = 1; v < g.node_count(); ++v)
        if (find(v) != root) return false;
    return true;
}

std::vector<NodeId> ref_kahn(const DirectedGraph& g) {
    std::vector<int> indeg(g.node_count(), 0);
    for (const Edge& e : g.edges()) ++indeg[e.to];
    std::vector<char> placed(g.node_count(), 0);
    std::vector<NodeId> order;
    for (NodeId round = 0; round < g.node_count(); ++round) {
        NodeId pick = kInvalidNode;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!placed[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == kInvalidNode) return {};  // cyclic
        placed[pick] = 1;
        order.push_back(pick);
        for (NodeId w : g.out_neighbors(pick)) --indeg[w];
    }
    return order;
}

long long ref_lower_bound(long long n, int s) {
    long long t = 1;
    while (s + (t - 1) * static_cast<long long>(s - 1) < n) ++t;
    return t;
}

DirectedGraph random_dag(NodeId n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.push_back({i, j});
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph random_digraph(NodeId n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            if (u != v && coin(rng) < p) edges.push_back({u, v});
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph random_connected_dag(NodeId n, double p, std::mt19937_64& rng, EdgeId max_m) {
    while (true) {
        DirectedGraph g = random_dag(n, p, rng);
        if (!ref_weakly_connected(g)) continue;
        if (max_m != 0 && g.edge_count() > max_m) continue;
        return g;
    }
}

std::vector<std::vector<NodeId>> random_steps(NodeId n, int s, int t, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> width(1, s);
    std::vector<std::vector<NodeId>> steps;
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < t; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        int w = std::min<int>(width(rng), static_cast<int>(n));
        steps.emplace_back(pool.begin(), pool.begin() + w);
    }
    return steps;
}

}  // namespace netsweep::testing
