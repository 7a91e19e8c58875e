#include "netsweep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace netsweep {

NodeIdMap NodeIdMap::identity(NodeId n) {
    NodeIdMap m;
    m.to_external_.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        m.to_internal_.emplace(static_cast<std::int64_t>(i), i);
        m.to_external_.push_back(static_cast<std::int64_t>(i));
    }
    return m;
}

NodeId NodeIdMap::intern(std::int64_t label) {
    auto [it, inserted] = to_internal_.try_emplace(label, static_cast<NodeId>(to_external_.size()));
    if (inserted) to_external_.push_back(label);
    return it->second;
}

NodeId NodeIdMap::internal(std::int64_t label) const {
    auto it = to_internal_.find(label);
    if (it == to_internal_.end())
        throw DomainError("unknown node label " + std::to_string(label));
    return it->second;
}

std::int64_t NodeIdMap::external(NodeId id) const {
    if (id >= to_external_.size())
        throw DomainError("internal node id out of range: " + std::to_string(id));
    return to_external_[id];
}

DirectedGraph DirectedGraph::from_edges(NodeId n, std::vector<Edge> edges) {
    DirectedGraph g;
    g.n_ = n;
    for (const Edge& e : edges) {
        if (e.from >= n || e.to >= n)
            throw DomainError("edge endpoint out of range: " + std::to_string(e.from) + " -> " +
                              std::to_string(e.to));
        if (e.from == e.to)
            throw DomainError("self-loop not allowed at node " + std::to_string(e.from));
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.from < b.from || (a.from == b.from && a.to < b.to); });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw DomainError("duplicate edge " + std::to_string(edges[i].from) + " -> " +
                              std::to_string(edges[i].to));

    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const Edge& e : edges) {
        ++g.out_offsets_[e.from + 1];
        ++g.in_offsets_[e.to + 1];
    }
    for (NodeId u = 0; u < n; ++u) {
        g.out_offsets_[u + 1] += g.out_offsets_[u];
        g.in_offsets_[u + 1] += g.in_offsets_[u];
    }
    g.out_targets_.resize(edges.size());
    g.edge_from_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.out_targets_[i] = edges[i].to;  // edges already sorted by (from, to)
        g.edge_from_[i] = edges[i].from;
    }
    g.in_sources_.resize(edges.size());
    std::vector<EdgeId> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const Edge& e : edges) g.in_sources_[cursor[e.to]++] = e.from;
    for (NodeId v = 0; v < n; ++v)
        std::sort(g.in_sources_.begin() + g.in_offsets_[v], g.in_sources_.begin() + g.in_offsets_[v + 1]);
    return g;
}

std::span<const NodeId> DirectedGraph::out_neighbors(NodeId u) const {
    return {out_targets_.data() + out_offsets_[u], out_targets_.data() + out_offsets_[u + 1]};
}

std::span<const NodeId> DirectedGraph::in_neighbors(NodeId u) const {
    return {in_sources_.data() + in_offsets_[u], in_sources_.data() + in_offsets_[u + 1]};
}

NodeId DirectedGraph::out_degree(NodeId u) const {
    return static_cast<NodeId>(out_offsets_[u + 1] - out_offsets_[u]);
}

NodeId DirectedGraph::in_degree(NodeId u) const {
    return static_cast<NodeId>(in_offsets_[u + 1] - in_offsets_[u]);
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const { return edge_id(u, v) != kInvalidEdge; }

EdgeId DirectedGraph::edge_id(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return kInvalidEdge;
    auto row = out_neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) return kInvalidEdge;
    return static_cast<EdgeId>(out_offsets_[u] + (it - row.begin()));
}

Edge DirectedGraph::edge(EdgeId e) const {
    if (e >= out_targets_.size())
        throw DomainError("edge id out of range: " + std::to_string(e));
    return {edge_from_[e], out_targets_[e]};
}

std::vector<Edge> DirectedGraph::edges() const {
    std::vector<Edge> result(out_targets_.size());
    for (EdgeId e = 0; e < out_targets_.size(); ++e) result[e] = {edge_from_[e], out_targets_[e]};
    return result;
}

LoadResult load_edge_list(const std::string& path, bool reverse) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    LoadResult result;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": expected exactly two integer node labels");
        NodeId u = result.ids.intern(a);
        NodeId v = result.ids.intern(b);
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        if (reverse) std::swap(u, v);
        edges.push_back({u, v});
    }
    if (result.ids.size() == 0) throw DomainError(path + ": no nodes found");

    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.from < b.from || (a.from == b.from && a.to < b.to); });
    std::vector<Edge> unique;
    unique.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!unique.empty() && unique.back() == e)
            ++result.duplicate_edges_dropped;
        else
            unique.push_back(e);
    }
    result.graph = DirectedGraph::from_edges(result.ids.size(), std::move(unique));
    return result;
}

void write_edge_list(const DirectedGraph& g, const NodeIdMap& ids, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Edge ed = g.edge(e);
        out << ids.external(ed.from) << ' ' << ids.external(ed.to) << '\n';
    }
    if (!out) throw Error("write failure on " + path);
}

WeakComponents weak_components(const DirectedGraph& g) {
    WeakComponents wc;
    wc.label.assign(g.node_count(), -1);
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (wc.label[start] != -1) continue;
        int c = wc.count++;
        std::vector<NodeId> stack{start};
        wc.label[start] = c;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : g.out_neighbors(u))
                if (wc.label[v] == -1) {
                    wc.label[v] = c;
                    stack.push_back(v);
                }
            for (NodeId v : g.in_neighbors(u))
                if (wc.label[v] == -1) {
                    wc.label[v] = c;
                    stack.push_back(v);
                }
        }
    }
    return wc;
}

bool is_weakly_connected(const DirectedGraph& g) {
    if (g.node_count() == 0) return false;
    return weak_components(g).count == 1;
}

std::vector<NodeId> largest_weak_component(const DirectedGraph& g) {
    WeakComponents wc = weak_components(g);
    std::vector<std::size_t> size(wc.count, 0);
    for (int c : wc.label) ++size[c];
    // Components are numbered in order of smallest member, so the first
    // maximal component wins ties towards the smallest node id.
    int best = 0;
    for (int c = 1; c < wc.count; ++c)
        if (size[c] > size[best]) best = c;
    std::vector<NodeId> nodes;
    nodes.reserve(size[best]);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (wc.label[v] == best) nodes.push_back(v);
    return nodes;
}

SubgraphResult induced_subgraph(const DirectedGraph& g, const std::vector<NodeId>& remove) {
    std::vector<char> gone(g.node_count(), 0);
    for (NodeId v : remove) {
        if (v >= g.node_count())
            throw DomainError("cannot remove node " + std::to_string(v) + ": out of range");
        gone[v] = 1;
    }
    SubgraphResult r;
    r.from_parent.assign(g.node_count(), kInvalidNode);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (gone[v]) continue;
        r.from_parent[v] = static_cast<NodeId>(r.to_parent.size());
        r.to_parent.push_back(v);
    }
    if (r.to_parent.empty()) throw DomainError("induced subgraph would be empty");

    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Edge ed = g.edge(e);
        if (gone[ed.from] || gone[ed.to]) continue;
        edges.push_back({r.from_parent[ed.from], r.from_parent[ed.to]});
    }
    r.graph = DirectedGraph::from_edges(static_cast<NodeId>(r.to_parent.size()), std::move(edges));
    return r;
}

TopoResult topological_order(const DirectedGraph& g) {
    TopoResult r;
    std::vector<NodeId> indeg(g.node_count());
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    r.order.reserve(g.node_count());
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        r.order.push_back(u);
        for (NodeId v : g.out_neighbors(u))
            if (--indeg[v] == 0) ready.push(v);
    }
    if (r.order.size() == g.node_count()) return r;

    // Cyclic: every remaining node still has an unprocessed in-edge. Walk
    // backwards along such edges until a node repeats, then cut the walk.
    r.order.clear();
    std::vector<char> remains(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) remains[v] = indeg[v] > 0;
    NodeId start = 0;
    while (!remains[start]) ++start;
    std::vector<NodeId> walk;
    std::vector<int> pos(g.node_count(), -1);
    NodeId cur = start;
    while (pos[cur] == -1) {
        pos[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (NodeId p : g.in_neighbors(cur))
            if (remains[p]) {
                cur = p;
                break;
            }
    }
    // walk[pos[cur]..] is a cycle traversed backwards; reverse to edge order.
    r.cycle.assign(walk.begin() + pos[cur], walk.end());
    std::reverse(r.cycle.begin(), r.cycle.end());
    return r;
}

}  // namespace netsweep
