#include "netsweep/baselines.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "netsweep/decomposition.hpp"
#include "netsweep/dynamics.hpp"

namespace netsweep {

namespace {

// Cleared-edge set as a fixed-width bitmask (n <= 12 keeps m <= 132).
struct EdgeMask {
    std::array<std::uint64_t, 3> bits{};
    void set(unsigned i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(unsigned i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    friend bool operator==(const EdgeMask&, const EdgeMask&) = default;
};

struct EdgeMaskHash {
    std::size_t operator()(const EdgeMask& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : m.bits) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

using NodeMask = std::uint32_t;

// Everything the transition function needs, precomputed once per graph.
struct OracleTables {
    const DirectedGraph& g;
    int searchers;
    unsigned m;
    EdgeMask full;
    std::vector<NodeId> tail, head;
    std::vector<NodeMask> out_mask;              // node -> mask of out-neighbors
    std::vector<EdgeMask> tail_edges;            // node -> edges leaving it
    std::vector<NodeMask> placements;            // all node sets with 1..s nodes
    std::vector<EdgeMask> placement_bg;          // edges inside each placement

    OracleTables(const DirectedGraph& graph, int s) : g(graph), searchers(s) {
        const NodeId n = g.node_count();
        m = g.edge_count();
        for (unsigned e = 0; e < m; ++e) full.set(e);
        tail.resize(m);
        head.resize(m);
        out_mask.assign(n, 0);
        tail_edges.assign(n, {});
        for (unsigned e = 0; e < m; ++e) {
            Edge ed = g.edge(e);
            tail[e] = ed.from;
            head[e] = ed.to;
            out_mask[ed.from] |= NodeMask{1} << ed.to;
            tail_edges[ed.from].set(e);
        }
        for (NodeMask w = 1; w < (NodeMask{1} << n); ++w) {
            int width = std::popcount(w);
            if (width < 1 || width > s) continue;
            placements.push_back(w);
            EdgeMask bg;
            for (unsigned e = 0; e < m; ++e)
                if ((w >> tail[e] & 1) && (w >> head[e] & 1)) bg.set(e);
            placement_bg.push_back(bg);
        }
    }

    // Clears the placement's internal edges, then recontaminates every
    // cleared edge reachable (avoiding the placement) from the head of a
    // contaminated edge, to a fixed point.
    EdgeMask transition(const EdgeMask& cleared, std::size_t placement) const {
        const NodeMask w = placements[placement];
        EdgeMask cur = cleared;
        for (int i = 0; i < 3; ++i) cur.bits[i] |= placement_bg[placement].bits[i];
        while (true) {
            NodeMask seeds = 0;
            for (unsigned e = 0; e < m; ++e)
                if (!cur.test(e)) seeds |= NodeMask{1} << head[e];
            seeds &= ~w;
            NodeMask reach = seeds;
            while (true) {
                NodeMask next = reach;
                for (NodeMask rest = reach; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    next |= out_mask[v];
                }
                next &= ~w;
                if (next == reach) break;
                reach = next;
            }
            EdgeMask removal;
            for (NodeMask rest = reach; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                for (int i = 0; i < 3; ++i) removal.bits[i] |= tail_edges[v].bits[i];
            }
            EdgeMask next = cur;
            for (int i = 0; i < 3; ++i) next.bits[i] &= ~removal.bits[i];
            if (next == cur) break;
            cur = next;
        }
        return cur;
    }

    // Node set touched by contaminated edges; placements outside it are
    // dominated (they clear nothing new and block no new path).
    NodeMask contaminated_touch(const EdgeMask& cleared) const {
        NodeMask touch = 0;
        for (unsigned e = 0; e < m; ++e)
            if (!cleared.test(e)) touch |= (NodeMask{1} << tail[e]) | (NodeMask{1} << head[e]);
        return touch;
    }

    std::vector<NodeId> placement_nodes(std::size_t placement) const {
        std::vector<NodeId> nodes;
        for (NodeMask rest = placements[placement]; rest;) {
            nodes.push_back(static_cast<NodeId>(std::countr_zero(rest)));
            rest &= rest - 1;
        }
        return nodes;
    }
};

void check_oracle_input(const DirectedGraph& g, int s, NodeId max_nodes) {
    if (s < 2) throw DomainError("need at least 2 searchers, got " + std::to_string(s));
    if (g.node_count() > max_nodes)
        throw DomainError("exact search handles at most " + std::to_string(max_nodes) +
                          " nodes, got " + std::to_string(g.node_count()));
}

}  // namespace

OracleResult exact_search_time(const DirectedGraph& g, int s, long long max_steps) {
    check_oracle_input(g, s, 12);
    OracleResult result;
    result.witness.searchers = s;
    if (g.edge_count() == 0) return result;

    OracleTables tables(g, s);
    struct Origin {
        EdgeMask from;
        std::size_t placement;
    };
    std::unordered_map<EdgeMask, Origin, EdgeMaskHash> visited;
    std::vector<EdgeMask> frontier{EdgeMask{}};
    visited.emplace(EdgeMask{}, Origin{EdgeMask{}, 0});

    for (long long depth = 1; depth <= max_steps && !frontier.empty(); ++depth) {
        std::vector<EdgeMask> next_frontier;
        for (const EdgeMask& state : frontier) {
            ++result.explored;
            NodeMask touch = tables.contaminated_touch(state);
            for (std::size_t p = 0; p < tables.placements.size(); ++p) {
                if ((tables.placements[p] & touch) == 0) continue;
                EdgeMask next = tables.transition(state, p);
                if (visited.count(next)) continue;
                visited.emplace(next, Origin{state, p});
                if (next == tables.full) {
                    result.length = depth;
                    EdgeMask cur = next;
                    std::vector<std::size_t> picks;
                    while (!(cur == EdgeMask{})) {
                        const Origin& o = visited.at(cur);
                        picks.push_back(o.placement);
                        cur = o.from;
                    }
                    std::reverse(picks.begin(), picks.end());
                    for (std::size_t pick : picks)
                        result.witness.steps.push_back(tables.placement_nodes(pick));
                    return result;
                }
                next_frontier.push_back(next);
            }
        }
        frontier = std::move(next_frontier);
    }
    result.exceeded = true;
    return result;
}

OracleResult exact_search_time_iddfs(const DirectedGraph& g, int s, long long max_steps) {
    check_oracle_input(g, s, 7);
    OracleResult result;
    result.witness.searchers = s;
    if (g.edge_count() == 0) return result;

    OracleTables tables(g, s);
    std::vector<std::size_t> picks;
    // Considers every placement -- no dominance filter -- so it doubles as a
    // check on the breadth-first oracle's pruning; remembering the budget a
    // state already failed with keeps the depth-limited sweep from redoing
    // identical subtrees (a state's fate depends only on the budget left).
    std::unordered_map<EdgeMask, long long, EdgeMaskHash> failed_with;
    auto dfs = [&](auto&& self, const EdgeMask& state, long long remaining) -> bool {
        if (state == tables.full) return true;
        if (remaining == 0) return false;
        if (auto it = failed_with.find(state); it != failed_with.end() && it->second >= remaining)
            return false;
        ++result.explored;
        for (std::size_t p = 0; p < tables.placements.size(); ++p) {
            picks.push_back(p);
            if (self(self, tables.transition(state, p), remaining - 1)) return true;
            picks.pop_back();
        }
        auto [it, inserted] = failed_with.try_emplace(state, remaining);
        if (!inserted && it->second < remaining) it->second = remaining;
        return false;
    };
    for (long long limit = 1; limit <= max_steps; ++limit) {
        picks.clear();
        if (dfs(dfs, EdgeMask{}, limit)) {
            result.length = limit;
            for (std::size_t p : picks) result.witness.steps.push_back(tables.placement_nodes(p));
            return result;
        }
    }
    result.exceeded = true;
    return result;
}

SearchStrategy splitting_strategy(const DirectedGraph& g, int s) {
    if (s < 2) throw DomainError("need at least 2 searchers, got " + std::to_string(s));
    std::vector<std::vector<NodeId>> chains = phase_one_sequences(g);

    // Branches are always served in the same order: ascending head id, ties by
    // content. Searchers are dealt around that ring two per branch each step.
    std::vector<std::size_t> rank(chains.size());
    {
        std::vector<std::size_t> by_content(chains.size());
        std::iota(by_content.begin(), by_content.end(), 0);
        std::sort(by_content.begin(), by_content.end(),
                  [&](std::size_t a, std::size_t b) { return chains[a] < chains[b]; });
        for (std::size_t i = 0; i < by_content.size(); ++i) rank[by_content[i]] = i;
    }

    std::vector<std::size_t> pos(chains.size(), 0);  // next edge index per chain
    std::vector<char> cleared(g.edge_count(), 0);
    auto chain_edge = [&](std::size_t c, std::size_t i) {
        return g.edge_id(chains[c][i], chains[c][i + 1]);
    };
    auto complete = [&](std::size_t c) { return pos[c] + 1 >= chains[c].size(); };

    SearchStrategy strategy;
    strategy.searchers = s;
    std::vector<char> in_step(g.node_count(), 0);
    // Progress is not monotone (lost edges rewind a chain), so guard against
    // any cycle in the bookkeeping with a generous hard ceiling.
    const std::size_t step_cap =
        4 * (static_cast<std::size_t>(g.edge_count()) + 2) * (static_cast<std::size_t>(g.edge_count()) + 2);

    while (true) {
        // Resume every chain at its first contaminated edge. This rewinds a
        // chain whenever an edge it had cleared was lost again, so the crews
        // go back for it instead of skipping it as done.
        bool all_done = true;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            pos[c] = 0;
            while (!complete(c) && cleared[chain_edge(c, pos[c])]) ++pos[c];
            if (!complete(c)) all_done = false;
        }
        if (all_done) break;

        // A chain mid-run is always serviceable (its previous edge is cleared
        // and interior nodes have no other in-edges); one still at its head
        // must wait until every in-edge of the head is cleared.
        std::vector<std::size_t> open;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            if (complete(c)) continue;
            bool ready = pos[c] > 0;
            if (!ready) {
                ready = true;
                for (NodeId w : g.in_neighbors(chains[c].front()))
                    if (!cleared[g.edge_id(w, chains[c].front())]) {
                        ready = false;
                        break;
                    }
            }
            if (ready) open.push_back(c);
        }
        if (open.empty()) throw InternalError("chain baseline stalled on an acyclic graph");
        std::sort(open.begin(), open.end(),
                  [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

        std::vector<NodeId> step;
        int budget = s;
        std::vector<EdgeId> walked;

        auto skip_cleared = [&](std::size_t c) {
            while (!complete(c) && cleared[chain_edge(c, pos[c])]) ++pos[c];
        };
        auto try_advance = [&](std::size_t c) {
            NodeId u = chains[c][pos[c]], v = chains[c][pos[c] + 1];
            int cost = (in_step[u] ? 0 : 1) + (in_step[v] ? 0 : 1);
            if (cost > budget) return false;
            budget -= cost;
            if (!in_step[u]) {
                in_step[u] = 1;
                step.push_back(u);
            }
            if (!in_step[v]) {
                in_step[v] = 1;
                step.push_back(v);
            }
            walked.push_back(g.edge_id(u, v));
            ++pos[c];
            return true;
        };

        // Deal one advance (up to two searchers) per open chain in order.
        for (std::size_t c : open) {
            skip_cleared(c);
            if (complete(c)) continue;
            if (!try_advance(c)) break;
        }
        // Leftover searchers deepen the lowest chains in service order.
        for (std::size_t c : open) {
            while (true) {
                skip_cleared(c);
                if (complete(c) || !try_advance(c)) break;
            }
        }

        if (step.empty()) throw InternalError("chain baseline stalled on an acyclic graph");
        for (EdgeId e : walked) cleared[e] = 1;
        for (NodeId u : step)
            for (NodeId v : g.out_neighbors(u))
                if (in_step[v]) cleared[g.edge_id(u, v)] = 1;
        apply_recontamination(g, in_step, cleared);
        for (NodeId u : step) in_step[u] = 0;
        strategy.steps.push_back(std::move(step));
        if (strategy.steps.size() > step_cap)
            throw InternalError("chain baseline exceeded its step ceiling");
    }

    ValidationReport report = validate(g, strategy);
    if (!report.ok)
        throw InternalError("chain baseline produced an invalid strategy: " + report.message);
    return strategy;
}

}  // namespace netsweep
