#include "netsweep/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace netsweep {

std::vector<Edge> Section::edges() const {
    std::vector<Edge> result;
    for (const auto& branch : branches)
        for (std::size_t i = 0; i + 1 < branch.size(); ++i)
            result.push_back({branch[i], branch[i + 1]});
    return result;
}

std::vector<NodeId> Section::nodes() const {
    std::vector<NodeId> result;
    for (const auto& branch : branches) result.insert(result.end(), branch.begin(), branch.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool Section::is_endpoint(NodeId v) const {
    return std::find(tops.begin(), tops.end(), v) != tops.end() ||
           std::find(bottoms.begin(), bottoms.end(), v) != bottoms.end();
}

std::vector<std::vector<NodeId>> phase_one_sequences(const DirectedGraph& g) {
    TopoResult topo = topological_order(g);
    if (!topo.is_dag())
        throw DomainError("graph is cyclic; the decomposition needs an acyclic graph");

    std::vector<char> consumed(g.edge_count(), 0);
    std::vector<std::vector<NodeId>> sequences;
    for (NodeId v : topo.order) {
        for (NodeId w : g.out_neighbors(v)) {
            EdgeId first = g.edge_id(v, w);
            if (consumed[first]) continue;
            consumed[first] = 1;
            std::vector<NodeId> seq{v, w};
            NodeId cur = w;
            while (g.in_degree(cur) == 1 && g.out_degree(cur) == 1) {
                NodeId next = g.out_neighbors(cur)[0];
                EdgeId e = g.edge_id(cur, next);
                if (consumed[e]) break;
                consumed[e] = 1;
                seq.push_back(next);
                cur = next;
            }
            sequences.push_back(std::move(seq));
        }
    }
    return sequences;
}

namespace {

// Interior nodes of a chain (everything but first and last).
void collect_interiors(const std::vector<NodeId>& seq, std::vector<NodeId>& out) {
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) out.push_back(seq[i]);
}

std::string join_ids(const std::vector<NodeId>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

Decomposition phase_two_sections(const std::vector<std::vector<NodeId>>& sequences) {
    for (const auto& seq : sequences)
        if (seq.size() < 2) throw DomainError("chains need at least two nodes");

    Decomposition d;
    const std::size_t k = sequences.size();
    std::vector<char> claimed(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (claimed[i]) continue;
        const auto& lead = sequences[i];
        std::vector<std::size_t> same_start, same_both, same_end;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (claimed[j]) continue;
            if (sequences[j].front() == lead.front()) {
                same_start.push_back(j);
                if (sequences[j].back() == lead.back()) same_both.push_back(j);
            } else if (sequences[j].back() == lead.back()) {
                same_end.push_back(j);
            }
        }

        Section s;
        std::vector<std::size_t> members{i};
        if (!same_start.empty()) {
            bool diamond = false;
            if (!same_both.empty()) {
                std::vector<std::size_t> candidates{i};
                candidates.insert(candidates.end(), same_both.begin(), same_both.end());
                std::vector<NodeId> interiors;
                for (std::size_t c : candidates) collect_interiors(sequences[c], interiors);
                std::sort(interiors.begin(), interiors.end());
                diamond = std::adjacent_find(interiors.begin(), interiors.end()) == interiors.end();
                if (!diamond)
                    d.diagnostics.push_back(
                        "chains from " + std::to_string(lead.front()) + " to " +
                        std::to_string(lead.back()) +
                        " share interior nodes; using a branching section instead of a diamond");
                else
                    members = candidates;
            }
            if (diamond) {
                s.kind = SectionKind::Diamond;
                s.tops = {lead.front()};
                s.bottoms = {lead.back()};
            } else {
                members.insert(members.end(), same_start.begin(), same_start.end());
                s.kind = SectionKind::Branch;
                s.tops = {lead.front()};
                for (std::size_t c : members) s.bottoms.push_back(sequences[c].back());
            }
        } else if (!same_end.empty()) {
            members.insert(members.end(), same_end.begin(), same_end.end());
            s.kind = SectionKind::ReverseBranch;
            for (std::size_t c : members) s.tops.push_back(sequences[c].front());
            s.bottoms = {lead.back()};
        } else {
            s.kind = SectionKind::Path;
            s.tops = {lead.front()};
            s.bottoms = {lead.back()};
        }
        for (std::size_t c : members) {
            claimed[c] = 1;
            s.branches.push_back(sequences[c]);
        }
        d.sections.push_back(std::move(s));
    }
    return d;
}

Decomposition decompose(const DirectedGraph& g) {
    return phase_two_sections(phase_one_sequences(g));
}

OverlapReport overlap_of(const Decomposition& d, NodeId n) {
    OverlapReport report;
    report.overlap.assign(n, 0);
    std::vector<long long> endpoint_count(n, 0);
    for (const Section& s : d.sections) {
        std::vector<NodeId> endpoints(s.tops);
        endpoints.insert(endpoints.end(), s.bottoms.begin(), s.bottoms.end());
        std::sort(endpoints.begin(), endpoints.end());
        endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
        for (NodeId v : endpoints)
            if (v < n) ++endpoint_count[v];
    }
    for (NodeId v = 0; v < n; ++v) {
        report.overlap[v] = endpoint_count[v] >= 3 ? endpoint_count[v] : 0;
        report.omega += report.overlap[v];
    }
    report.fraction = n > 1 ? static_cast<double>(report.omega) / (n - 1) : 0.0;
    return report;
}

namespace {

const char* kind_name(SectionKind k) {
    switch (k) {
        case SectionKind::Branch: return "branching";
        case SectionKind::ReverseBranch: return "reverse-branching";
        case SectionKind::Diamond: return "diamond";
        case SectionKind::Path: return "path";
    }
    return "?";
}

// Within-section in/out degrees over the section's edges.
struct SectionDegrees {
    std::unordered_map<NodeId, int> in, out;
    void add(const Edge& e) {
        ++out[e.from];
        ++in[e.to];
    }
    int din(NodeId v) const {
        auto it = in.find(v);
        return it == in.end() ? 0 : it->second;
    }
    int dout(NodeId v) const {
        auto it = out.find(v);
        return it == out.end() ? 0 : it->second;
    }
};

}  // namespace

ValidityReport is_valid(const DirectedGraph& g, const Decomposition& d) {
    auto fail = [](std::string msg) { return ValidityReport{false, std::move(msg)}; };

    std::vector<int> claims(g.edge_count(), 0);
    for (std::size_t si = 0; si < d.sections.size(); ++si) {
        const Section& s = d.sections[si];
        const std::string where = "section " + std::to_string(si) + " (" + kind_name(s.kind) + ")";
        if (s.branches.empty()) return fail(where + ": no branches");

        SectionDegrees deg;
        for (const auto& branch : s.branches) {
            if (branch.size() < 2) return fail(where + ": branch with fewer than two nodes");
            for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
                EdgeId e = g.edge_id(branch[i], branch[i + 1]);
                if (e == kInvalidEdge)
                    return fail(where + ": edge " + std::to_string(branch[i]) + " -> " +
                                std::to_string(branch[i + 1]) + " not in the graph");
                ++claims[e];
                deg.add({branch[i], branch[i + 1]});
            }
        }

        switch (s.kind) {
            case SectionKind::Branch: {
                if (s.tops.size() != 1) return fail(where + ": needs exactly one top");
                if (s.branches.size() < 2) return fail(where + ": needs at least two branches");
                if (s.bottoms.size() != s.branches.size())
                    return fail(where + ": needs one bottom per branch");
                for (std::size_t b = 0; b < s.branches.size(); ++b) {
                    if (s.branches[b].front() != s.tops[0])
                        return fail(where + ": branch does not start at the top");
                    if (s.branches[b].back() != s.bottoms[b])
                        return fail(where + ": bottom list does not match branch ends");
                }
                if (deg.din(s.tops[0]) != 0) return fail(where + ": edges re-enter the top");
                break;
            }
            case SectionKind::ReverseBranch: {
                if (s.bottoms.size() != 1) return fail(where + ": needs exactly one bottom");
                if (s.branches.size() < 2) return fail(where + ": needs at least two branches");
                if (s.tops.size() != s.branches.size())
                    return fail(where + ": needs one top per branch");
                for (std::size_t b = 0; b < s.branches.size(); ++b) {
                    if (s.branches[b].front() != s.tops[b])
                        return fail(where + ": top list does not match branch starts");
                    if (s.branches[b].back() != s.bottoms[0])
                        return fail(where + ": branch does not end at the bottom");
                }
                if (deg.dout(s.bottoms[0]) != 0) return fail(where + ": edges leave the bottom");
                break;
            }
            case SectionKind::Diamond: {
                if (s.tops.size() != 1 || s.bottoms.size() != 1)
                    return fail(where + ": needs exactly one top and one bottom");
                if (s.tops[0] == s.bottoms[0]) return fail(where + ": top equals bottom");
                if (s.branches.size() < 2) return fail(where + ": needs at least two branches");
                for (const auto& branch : s.branches) {
                    if (branch.front() != s.tops[0])
                        return fail(where + ": branch does not start at the top");
                    if (branch.back() != s.bottoms[0])
                        return fail(where + ": branch does not end at the bottom");
                }
                if (deg.din(s.tops[0]) != 0) return fail(where + ": edges re-enter the top");
                if (deg.dout(s.bottoms[0]) != 0) return fail(where + ": edges leave the bottom");
                break;
            }
            case SectionKind::Path: {
                if (s.branches.size() != 1) return fail(where + ": needs exactly one branch");
                if (s.tops.size() != 1 || s.bottoms.size() != 1)
                    return fail(where + ": needs exactly one top and one bottom");
                if (s.tops[0] != s.branches[0].front() || s.bottoms[0] != s.branches[0].back())
                    return fail(where + ": endpoints do not match the branch");
                if (s.tops[0] == s.bottoms[0]) return fail(where + ": path closes a cycle");
                break;
            }
        }

        // Interior nodes must be plain pass-throughs inside their section.
        for (const auto& branch : s.branches)
            for (std::size_t i = 1; i + 1 < branch.size(); ++i) {
                NodeId v = branch[i];
                if (deg.din(v) != 1 || deg.dout(v) != 1)
                    return fail(where + ": interior node " + std::to_string(v) +
                                " is shared or revisited");
            }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (claims[e] == 0) {
            Edge ed = g.edge(e);
            return fail("edge " + std::to_string(ed.from) + " -> " + std::to_string(ed.to) +
                        " not covered by any section");
        }
        if (claims[e] > 1) {
            Edge ed = g.edge(e);
            return fail("edge " + std::to_string(ed.from) + " -> " + std::to_string(ed.to) +
                        " covered " + std::to_string(claims[e]) + " times");
        }
    }

    // Sections may only meet at tops or bottoms.
    std::unordered_map<NodeId, std::vector<std::size_t>> containing;
    for (std::size_t si = 0; si < d.sections.size(); ++si)
        for (NodeId v : d.sections[si].nodes()) containing[v].push_back(si);
    for (const auto& [v, secs] : containing) {
        if (secs.size() < 2) continue;
        for (std::size_t si : secs)
            if (!d.sections[si].is_endpoint(v))
                return fail("node " + std::to_string(v) + " is interior to section " +
                            std::to_string(si) + " but appears in " +
                            std::to_string(secs.size()) + " sections");
    }
    return {};
}

namespace {

// Local degree view of an edge set used by the shape recognizer.
struct LocalView {
    std::map<NodeId, std::vector<NodeId>> out, in;
    std::size_t edge_count = 0;
    bool ok = true;  // false on duplicate edges

    explicit LocalView(const std::vector<Edge>& edges) {
        for (const Edge& e : edges) {
            out[e.from].push_back(e.to);
            in[e.to].push_back(e.from);
            out.try_emplace(e.to);
            in.try_emplace(e.from);
            ++edge_count;
        }
        for (auto& [v, row] : out) {
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end()) ok = false;
        }
        for (auto& [v, row] : in) std::sort(row.begin(), row.end());
    }
    int din(NodeId v) const { return static_cast<int>(in.at(v).size()); }
    int dout(NodeId v) const { return static_cast<int>(out.at(v).size()); }
};

// Tries to see the edge set as one section of the requested kind; returns
// the section (with tops/bottoms/branches filled in) when it fits.
std::optional<Section> recognize_section(SectionKind kind, const std::vector<Edge>& edges) {
    if (edges.empty()) return std::nullopt;
    LocalView view(edges);
    if (!view.ok) return std::nullopt;

    std::vector<NodeId> sources, sinks;
    for (const auto& [v, row] : view.out) {
        if (view.din(v) == 0) sources.push_back(v);
        if (view.dout(v) == 0) sinks.push_back(v);
    }

    // Follows out-edges from `from` through pass-through nodes; stops at a
    // node with no out-edges. Fails on any other degree pattern or when the
    // walk runs longer than the edge set (a cycle).
    auto walk_forward = [&](NodeId top, NodeId first) -> std::optional<std::vector<NodeId>> {
        std::vector<NodeId> branch{top, first};
        NodeId cur = first;
        std::size_t steps = 1;
        while (view.dout(cur) != 0) {
            if (view.din(cur) != 1 || view.dout(cur) != 1) return std::nullopt;
            cur = view.out.at(cur)[0];
            branch.push_back(cur);
            if (++steps > view.edge_count) return std::nullopt;
        }
        return branch;
    };
    auto walk_backward = [&](NodeId bottom, NodeId first) -> std::optional<std::vector<NodeId>> {
        std::vector<NodeId> branch{bottom, first};
        NodeId cur = first;
        std::size_t steps = 1;
        while (view.din(cur) != 0) {
            if (view.din(cur) != 1 || view.dout(cur) != 1) return std::nullopt;
            cur = view.in.at(cur)[0];
            branch.push_back(cur);
            if (++steps > view.edge_count) return std::nullopt;
        }
        std::reverse(branch.begin(), branch.end());
        return branch;
    };

    Section s;
    s.kind = kind;
    std::size_t consumed = 0;
    switch (kind) {
        case SectionKind::Path: {
            if (sources.size() != 1 || sinks.size() != 1) return std::nullopt;
            if (view.dout(sources[0]) != 1) return std::nullopt;
            auto branch = walk_forward(sources[0], view.out.at(sources[0])[0]);
            if (!branch) return std::nullopt;
            consumed = branch->size() - 1;
            s.tops = {branch->front()};
            s.bottoms = {branch->back()};
            s.branches = {*branch};
            break;
        }
        case SectionKind::Branch: {
            if (sources.size() != 1) return std::nullopt;
            NodeId top = sources[0];
            if (view.dout(top) < 2) return std::nullopt;
            for (NodeId first : view.out.at(top)) {
                auto branch = walk_forward(top, first);
                if (!branch) return std::nullopt;
                consumed += branch->size() - 1;
                s.bottoms.push_back(branch->back());
                s.branches.push_back(std::move(*branch));
            }
            s.tops = {top};
            break;
        }
        case SectionKind::ReverseBranch: {
            if (sinks.size() != 1) return std::nullopt;
            NodeId bottom = sinks[0];
            if (view.din(bottom) < 2) return std::nullopt;
            for (NodeId first : view.in.at(bottom)) {
                auto branch = walk_backward(bottom, first);
                if (!branch) return std::nullopt;
                consumed += branch->size() - 1;
                s.tops.push_back(branch->front());
                s.branches.push_back(std::move(*branch));
            }
            s.bottoms = {bottom};
            break;
        }
        case SectionKind::Diamond: {
            if (sources.size() != 1 || sinks.size() != 1) return std::nullopt;
            NodeId top = sources[0], bottom = sinks[0];
            if (top == bottom || view.dout(top) < 2) return std::nullopt;
            for (NodeId first : view.out.at(top)) {
                auto branch = walk_forward(top, first);
                if (!branch || branch->back() != bottom) return std::nullopt;
                consumed += branch->size() - 1;
                s.branches.push_back(std::move(*branch));
            }
            s.tops = {top};
            s.bottoms = {bottom};
            break;
        }
    }
    if (consumed != view.edge_count) return std::nullopt;
    return s;
}

// Merged kind of two section kinds, if the pair is joinable at all.
std::optional<SectionKind> merge_target(SectionKind a, SectionKind b) {
    if (a == SectionKind::Path) return b;
    if (b == SectionKind::Path) return a;
    if (a == b) return a;
    if ((a == SectionKind::Branch && b == SectionKind::ReverseBranch) ||
        (a == SectionKind::ReverseBranch && b == SectionKind::Branch))
        return SectionKind::Diamond;
    return std::nullopt;
}

}  // namespace

MinimalityReport is_minimal(const DirectedGraph& g, const Decomposition& d) {
    ValidityReport vr = is_valid(g, d);
    if (!vr.valid) throw DomainError("decomposition is not valid: " + vr.problem);

    const std::size_t count = d.sections.size();
    std::vector<std::vector<NodeId>> nodes(count);
    std::vector<std::vector<Edge>> edges(count);
    for (std::size_t i = 0; i < count; ++i) {
        nodes[i] = d.sections[i].nodes();  // sorted
        edges[i] = d.sections[i].edges();
    }

    // Per-section degree tables (parallel to nodes[i]); validity guarantees
    // the sections partition the edge set, so the degree of a node in a
    // merged candidate is the plain sum over the merged sections.
    std::vector<std::vector<int>> din(count), dout(count);
    std::vector<std::vector<NodeId>> srcs(count), snks(count), fos(count), fis(count);
    for (std::size_t i = 0; i < count; ++i) {
        din[i].assign(nodes[i].size(), 0);
        dout[i].assign(nodes[i].size(), 0);
        auto at = [&](NodeId v) {
            return std::lower_bound(nodes[i].begin(), nodes[i].end(), v) - nodes[i].begin();
        };
        for (const Edge& e : edges[i]) {
            ++dout[i][at(e.from)];
            ++din[i][at(e.to)];
        }
        for (std::size_t j = 0; j < nodes[i].size(); ++j) {
            if (din[i][j] == 0) srcs[i].push_back(nodes[i][j]);
            if (dout[i][j] == 0) snks[i].push_back(nodes[i][j]);
            if (dout[i][j] >= 2) fos[i].push_back(nodes[i][j]);
            if (din[i][j] >= 2) fis[i].push_back(nodes[i][j]);
        }
    }
    auto din_of = [&](std::size_t i, NodeId v) -> int {
        auto it = std::lower_bound(nodes[i].begin(), nodes[i].end(), v);
        return it != nodes[i].end() && *it == v ? din[i][it - nodes[i].begin()] : 0;
    };
    auto dout_of = [&](std::size_t i, NodeId v) -> int {
        auto it = std::lower_bound(nodes[i].begin(), nodes[i].end(), v);
        return it != nodes[i].end() && *it == v ? dout[i][it - nodes[i].begin()] : 0;
    };

    std::unordered_map<NodeId, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < count; ++i)
        for (NodeId v : nodes[i]) containing[v].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> touching;
    for (const auto& [v, secs] : containing)
        for (std::size_t a = 0; a < secs.size(); ++a)
            for (std::size_t b = a + 1; b < secs.size(); ++b)
                touching.push_back({std::min(secs[a], secs[b]), std::max(secs[a], secs[b])});
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

    // Replacing the chosen sections by `merged` must keep every remaining
    // contact on tops or bottoms.
    auto context_ok = [&](const Section& merged, const std::vector<std::size_t>& gone) {
        std::vector<NodeId> merged_nodes = merged.nodes();
        for (std::size_t i = 0; i < count; ++i) {
            if (std::find(gone.begin(), gone.end(), i) != gone.end()) continue;
            for (NodeId v : nodes[i]) {
                if (!std::binary_search(merged_nodes.begin(), merged_nodes.end(), v)) continue;
                if (!merged.is_endpoint(v) || !d.sections[i].is_endpoint(v)) return false;
            }
        }
        return true;
    };
    auto describe = [&](const std::vector<std::size_t>& parts, SectionKind into) {
        std::string msg = "sections";
        for (std::size_t i : parts) msg += " " + std::to_string(i);
        msg += " merge into one ";
        msg += kind_name(into);
        msg += " section";
        return msg;
    };

    // Counts the merged pair's sources (zero in-degree nodes); when exactly
    // one exists, `which` names it.
    auto merged_sources = [&](std::size_t a, std::size_t b, NodeId& which) {
        int cnt = 0;
        for (NodeId v : srcs[a])
            if (din_of(b, v) == 0) {
                ++cnt;
                which = v;
            }
        for (NodeId v : srcs[b]) {
            if (std::binary_search(srcs[a].begin(), srcs[a].end(), v)) continue;
            if (din_of(a, v) == 0) {
                ++cnt;
                which = v;
            }
        }
        return cnt;
    };
    auto merged_sinks = [&](std::size_t a, std::size_t b, NodeId& which) {
        int cnt = 0;
        for (NodeId v : snks[a])
            if (dout_of(b, v) == 0) {
                ++cnt;
                which = v;
            }
        for (NodeId v : snks[b]) {
            if (std::binary_search(snks[a].begin(), snks[a].end(), v)) continue;
            if (dout_of(a, v) == 0) {
                ++cnt;
                which = v;
            }
        }
        return cnt;
    };
    // Fan-out (out-degree >= 2) and fan-in nodes of the merged pair: nodes
    // already heavy on one side, plus shared nodes whose degrees add up.
    std::vector<NodeId> fo, fi;
    auto merged_fans = [&](std::size_t a, std::size_t b) {
        fo.assign(fos[a].begin(), fos[a].end());
        fo.insert(fo.end(), fos[b].begin(), fos[b].end());
        fi.assign(fis[a].begin(), fis[a].end());
        fi.insert(fi.end(), fis[b].begin(), fis[b].end());
        std::size_t ia = 0, ib = 0;
        while (ia < nodes[a].size() && ib < nodes[b].size()) {
            if (nodes[a][ia] < nodes[b][ib])
                ++ia;
            else if (nodes[b][ib] < nodes[a][ia])
                ++ib;
            else {
                if (dout[a][ia] == 1 && dout[b][ib] == 1) fo.push_back(nodes[a][ia]);
                if (din[a][ia] == 1 && din[b][ib] == 1) fi.push_back(nodes[a][ia]);
                ++ia;
                ++ib;
            }
        }
        std::sort(fo.begin(), fo.end());
        fo.erase(std::unique(fo.begin(), fo.end()), fo.end());
        std::sort(fi.begin(), fi.end());
        fi.erase(std::unique(fi.begin(), fi.end()), fi.end());
    };

    // Degree profile a merged pair must show before the shape recognizer can
    // possibly accept it: a path has one source, one sink and no heavy node;
    // a branching has one source which is its only fan-out and fan-ins only
    // where walks end (sinks); reverse-branchings mirror that; a diamond has
    // a unique source/fan-out and a unique sink/fan-in, distinct.
    auto plausible = [&](SectionKind target, std::size_t a, std::size_t b) {
        NodeId source = kInvalidNode, sink = kInvalidNode;
        switch (target) {
            case SectionKind::Path:
                if (merged_sources(a, b, source) != 1 || merged_sinks(a, b, sink) != 1)
                    return false;
                merged_fans(a, b);
                return fo.empty() && fi.empty();
            case SectionKind::Branch: {
                if (merged_sources(a, b, source) != 1) return false;
                merged_fans(a, b);
                if (fo.size() != 1 || fo[0] != source) return false;
                for (NodeId v : fi)
                    if (dout_of(a, v) + dout_of(b, v) != 0) return false;
                return true;
            }
            case SectionKind::ReverseBranch: {
                if (merged_sinks(a, b, sink) != 1) return false;
                merged_fans(a, b);
                if (fi.size() != 1 || fi[0] != sink) return false;
                for (NodeId v : fo)
                    if (din_of(a, v) + din_of(b, v) != 0) return false;
                return true;
            }
            case SectionKind::Diamond:
                if (merged_sources(a, b, source) != 1 || merged_sinks(a, b, sink) != 1 ||
                    source == sink)
                    return false;
                merged_fans(a, b);
                return fo.size() == 1 && fo[0] == source && fi.size() == 1 && fi[0] == sink;
        }
        return true;
    };

    for (const auto& [a, b] : touching) {
        auto target = merge_target(d.sections[a].kind, d.sections[b].kind);
        if (!target) continue;
        if (!plausible(*target, a, b)) continue;
        std::vector<Edge> merged_edges(edges[a]);
        merged_edges.insert(merged_edges.end(), edges[b].begin(), edges[b].end());
        auto merged = recognize_section(*target, merged_edges);
        if (!merged || !context_ok(*merged, {a, b})) continue;
        return {false, describe({a, b}, *target)};
    }

    // A path can also bridge a branching into a reverse-branching section,
    // closing the three of them into one diamond.
    std::vector<std::size_t> paths, branchings, reverses;
    for (std::size_t i = 0; i < count; ++i) {
        if (d.sections[i].kind == SectionKind::Path) paths.push_back(i);
        if (d.sections[i].kind == SectionKind::Branch) branchings.push_back(i);
        if (d.sections[i].kind == SectionKind::ReverseBranch) reverses.push_back(i);
    }
    auto touches = [&](std::size_t a, std::size_t b) {
        return std::binary_search(touching.begin(), touching.end(),
                                  std::pair{std::min(a, b), std::max(a, b)});
    };
    for (std::size_t p : paths)
        for (std::size_t b : branchings)
            for (std::size_t r : reverses) {
                int links = touches(p, b) + touches(p, r) + touches(b, r);
                if (links < 2) continue;  // the three must hang together
                std::vector<Edge> merged_edges(edges[p]);
                merged_edges.insert(merged_edges.end(), edges[b].begin(), edges[b].end());
                merged_edges.insert(merged_edges.end(), edges[r].begin(), edges[r].end());
                auto merged = recognize_section(SectionKind::Diamond, merged_edges);
                if (!merged || !context_ok(*merged, {p, b, r})) continue;
                return {false, describe({p, b, r}, SectionKind::Diamond)};
            }

    return {};
}

void write_decomposition(const Decomposition& d, const NodeIdMap& ids, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    auto label_list = [&](const std::vector<NodeId>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(ids.external(v[i]));
        return s;
    };
    for (const Section& s : d.sections) {
        out << static_cast<char>(s.kind) << " tops=" << label_list(s.tops)
            << " bottoms=" << label_list(s.bottoms) << " branches=";
        for (std::size_t b = 0; b < s.branches.size(); ++b)
            out << (b ? ";" : "") << label_list(s.branches[b]);
        out << '\n';
    }
    if (!out) throw Error("write failure on " + path);
}

namespace {

std::vector<NodeId> parse_label_list(const std::string& text, const NodeIdMap& ids,
                                     const std::string& where) {
    std::vector<NodeId> result;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            result.push_back(ids.internal(std::stoll(item)));
        } catch (const std::exception&) {
            throw ParseError(where + ": bad node label '" + item + "'");
        }
    }
    if (result.empty()) throw ParseError(where + ": empty node list");
    return result;
}

}  // namespace

Decomposition read_decomposition(const std::string& path, const NodeIdMap& ids) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Decomposition d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::string where = path + ":" + std::to_string(line_no);

        std::istringstream ls(line);
        std::string kind_token, tops_token, bottoms_token, branches_token;
        if (!(ls >> kind_token >> tops_token >> bottoms_token >> branches_token))
            throw ParseError(where + ": expected 'K tops=... bottoms=... branches=...'");
        if (kind_token.size() != 1 || std::string("BRDP").find(kind_token[0]) == std::string::npos)
            throw ParseError(where + ": unknown section kind '" + kind_token + "'");
        if (tops_token.rfind("tops=", 0) != 0 || bottoms_token.rfind("bottoms=", 0) != 0 ||
            branches_token.rfind("branches=", 0) != 0)
            throw ParseError(where + ": expected 'K tops=... bottoms=... branches=...'");

        Section s;
        s.kind = static_cast<SectionKind>(kind_token[0]);
        s.tops = parse_label_list(tops_token.substr(5), ids, where);
        s.bottoms = parse_label_list(bottoms_token.substr(8), ids, where);
        std::stringstream bs(branches_token.substr(9));
        std::string branch_text;
        while (std::getline(bs, branch_text, ';'))
            s.branches.push_back(parse_label_list(branch_text, ids, where));
        if (s.branches.empty()) throw ParseError(where + ": no branches");
        d.sections.push_back(std::move(s));
    }
    return d;
}

}  // namespace netsweep
