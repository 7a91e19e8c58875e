// Structural decomposition of an acyclic graph into sections -- branching
// (one node fanning out), reverse-branching (fanning in), diamond (parallel
// internally-disjoint routes) and path -- plus validity and minimality
// checks and the node-overlap statistic they induce.
#ifndef NETSWEEP_DECOMPOSITION_HPP
#define NETSWEEP_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "netsweep/graph.hpp"

namespace netsweep {

enum class SectionKind : char {
    Branch = 'B',         // one top, several outgoing branches
    ReverseBranch = 'R',  // several incoming branches, one bottom
    Diamond = 'D',        // one top, one bottom, internally disjoint branches
    Path = 'P',           // a single chain
};

struct Section {
    SectionKind kind = SectionKind::Path;
    std::vector<NodeId> tops;     // B/D/P: exactly one; R: one per branch
    std::vector<NodeId> bottoms;  // R/D/P: exactly one; B: one per branch
    std::vector<std::vector<NodeId>> branches;  // full node sequences

    std::vector<Edge> edges() const;   // consecutive pairs of every branch
    std::vector<NodeId> nodes() const; // sorted, unique
    bool is_endpoint(NodeId v) const;  // v among tops or bottoms
};

struct Decomposition {
    std::vector<Section> sections;
    std::vector<std::string> diagnostics;  // non-fatal notes from construction
};

// Splits the edges into maximal chains: walking a topological order
// (smallest id first), each unconsumed out-edge starts a chain that extends
// while the current node has exactly one in- and one out-edge. Every edge
// lands in exactly one chain. Throws DomainError on cyclic input.
std::vector<std::vector<NodeId>> phase_one_sequences(const DirectedGraph& g);

// Groups chains into sections: the first unclaimed chain joins all
// unclaimed chains with the same start (same end too: diamond, otherwise
// branching), else all with the same end (reverse branching), else stands
// alone as a path. A diamond whose chains share interior nodes falls back
// to a branching section with a diagnostic.
Decomposition phase_two_sections(const std::vector<std::vector<NodeId>>& sequences);

// phase_two_sections over phase_one_sequences.
Decomposition decompose(const DirectedGraph& g);

struct OverlapReport {
    std::vector<long long> overlap;  // per node: section-endpoint count r when r >= 3, else 0
    long long omega = 0;             // sum of overlap
    double fraction = 0.0;           // omega / (n - 1), 0 when n <= 1
};
OverlapReport overlap_of(const Decomposition& d, NodeId n);

struct ValidityReport {
    bool valid = true;
    std::string problem;
};

// A decomposition is valid when the sections partition the edge set, every
// section has its declared shape (branch interiors carry exactly one in- and
// one out-edge inside their section; branches of one section may share their
// final node), and distinct sections only meet at tops or bottoms.
ValidityReport is_valid(const DirectedGraph& g, const Decomposition& d);

struct MinimalityReport {
    bool minimal = true;
    std::string counterexample;  // the merge that shrinks the decomposition
};

// A valid decomposition is minimal when no two sections (or path + branching
// + reverse-branching triple) can be replaced by one valid section: a path
// can join any section, equal kinds can join, and branching plus reverse
// branching can close into a diamond. Throws DomainError when d is invalid.
MinimalityReport is_minimal(const DirectedGraph& g, const Decomposition& d);

// One section per line, e.g. "B tops=4 bottoms=8,7 branches=4,5,8;4,6,7"
// (external labels; nodes comma-separated, branches semicolon-separated).
void write_decomposition(const Decomposition& d, const NodeIdMap& ids, const std::string& path);
Decomposition read_decomposition(const std::string& path, const NodeIdMap& ids);

}  // namespace netsweep

#endif  // NETSWEEP_DECOMPOSITION_HPP
