// Immutable directed graph with dense node ids, plus edge-list loading,
// connectivity queries, induced subgraphs and topological ordering.
#ifndef NETSWEEP_GRAPH_HPP
#define NETSWEEP_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "netsweep/errors.hpp"

namespace netsweep {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);
inline constexpr EdgeId kInvalidEdge = static_cast<EdgeId>(-1);

struct Edge {
    NodeId from = kInvalidNode;
    NodeId to = kInvalidNode;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Maps external (file) node labels to dense internal ids assigned in first
// appearance order, and back.
class NodeIdMap {
  public:
    NodeIdMap() = default;

    // Identity map over n internal ids (label i <-> id i).
    static NodeIdMap identity(NodeId n);

    // Returns the internal id for a label, inserting a fresh id if unseen.
    NodeId intern(std::int64_t label);

    // Returns the internal id for a known label; throws DomainError if unknown.
    NodeId internal(std::int64_t label) const;
    bool contains(std::int64_t label) const { return to_internal_.count(label) != 0; }

    std::int64_t external(NodeId id) const;
    NodeId size() const { return static_cast<NodeId>(to_external_.size()); }

  private:
    std::unordered_map<std::int64_t, NodeId> to_internal_;
    std::vector<std::int64_t> to_external_;
};

// Simple directed graph (no self-loops, no duplicate edges). Adjacency lists
// are stored in compressed sparse rows and sorted ascending, which fixes the
// iteration order of every algorithm built on top. Edge ids are positions in
// the out-adjacency ordering, i.e. sorted by (from, to).
class DirectedGraph {
  public:
    DirectedGraph() = default;

    // Builds a graph from an edge list over internal ids 0..n-1. Throws
    // DomainError on out-of-range endpoints, self-loops or duplicates.
    static DirectedGraph from_edges(NodeId n, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(out_targets_.size()); }

    std::span<const NodeId> out_neighbors(NodeId u) const;
    std::span<const NodeId> in_neighbors(NodeId u) const;
    NodeId out_degree(NodeId u) const;
    NodeId in_degree(NodeId u) const;

    bool has_edge(NodeId u, NodeId v) const;
    // Edge id for (u, v); kInvalidEdge if absent.
    EdgeId edge_id(NodeId u, NodeId v) const;
    Edge edge(EdgeId e) const;

    // All edges sorted by (from, to); index in the result equals the edge id.
    std::vector<Edge> edges() const;

  private:
    NodeId n_ = 0;
    std::vector<EdgeId> out_offsets_;  // n+1 entries
    std::vector<NodeId> out_targets_;  // sorted within each row
    std::vector<NodeId> edge_from_;    // source of edge id e
    std::vector<EdgeId> in_offsets_;
    std::vector<NodeId> in_sources_;   // sorted within each row
};

struct LoadResult {
    DirectedGraph graph;
    NodeIdMap ids;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Loads a whitespace-separated edge list ("u v" per line, lines whose first
// non-space character is '#' are comments, blank lines ignored). Node labels
// become dense internal ids in first appearance order. Self-loops and
// duplicate edges are dropped and counted (their labels still register
// nodes). When reverse is set every edge direction is flipped.
// Throws ParseError with a line number on malformed input and DomainError
// when the file yields no nodes at all.
LoadResult load_edge_list(const std::string& path, bool reverse = false);

// Writes "from to" per line using external labels, edges in edge-id order.
void write_edge_list(const DirectedGraph& g, const NodeIdMap& ids, const std::string& path);

bool is_weakly_connected(const DirectedGraph& g);

struct WeakComponents {
    std::vector<int> label;  // per node, components numbered from 0 in order of smallest member
    int count = 0;
};
WeakComponents weak_components(const DirectedGraph& g);

// Nodes of the largest weakly connected component (ties broken towards the
// component containing the smallest node id), sorted ascending.
std::vector<NodeId> largest_weak_component(const DirectedGraph& g);

struct SubgraphResult {
    DirectedGraph graph;
    std::vector<NodeId> to_parent;    // new id -> old id, ascending in old id
    std::vector<NodeId> from_parent;  // old id -> new id or kInvalidNode
};

// Induced subgraph after removing the given nodes (duplicates tolerated).
// Throws DomainError when every node would be removed.
SubgraphResult induced_subgraph(const DirectedGraph& g, const std::vector<NodeId>& remove);

struct TopoResult {
    // Kahn's algorithm with ties broken by ascending node id; empty when the
    // graph is cyclic.
    std::vector<NodeId> order;
    // On a cyclic graph: a witness cycle v0 -> v1 -> ... -> vk -> v0 listed
    // without repeating v0; empty when the graph is acyclic.
    std::vector<NodeId> cycle;
    bool is_dag() const { return cycle.empty(); }
};
TopoResult topological_order(const DirectedGraph& g);

}  // namespace netsweep

#endif  // NETSWEEP_GRAPH_HPP
