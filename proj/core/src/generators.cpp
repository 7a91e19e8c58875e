#include "netsweep/generators.hpp"

#include <algorithm>
#include <random>

namespace netsweep {

DirectedGraph gen_ordered_er(NodeId n, double p, std::uint64_t seed) {
    if (n < 1) throw DomainError("need at least 1 node, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must be in [0, 1], got " + std::to_string(p));
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            // Top 53 bits as a uniform double in [0, 1).
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.push_back({i, j});
        }
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph gen_ba_dag(NodeId n, int m_links, int m0, std::uint64_t seed) {
    if (m_links < 1) throw DomainError("need at least 1 link per node");
    if (m_links > m0)
        throw DomainError("links per node (" + std::to_string(m_links) +
                          ") cannot exceed the seed nodes (" + std::to_string(m0) + ")");
    if (static_cast<NodeId>(m0) > n)
        throw DomainError("seed nodes exceed the total node count");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<NodeId> endpoints;  // one entry per edge endpoint: attachment is degree-biased
    for (NodeId t = static_cast<NodeId>(m0); t < n; ++t) {
        std::vector<NodeId> targets;
        while (targets.size() < static_cast<std::size_t>(m_links)) {
            NodeId candidate = endpoints.empty()
                                   ? static_cast<NodeId>(rng() % t)
                                   : endpoints[rng() % endpoints.size()];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        std::sort(targets.begin(), targets.end());
        for (NodeId old : targets) {
            edges.push_back({old, t});
            endpoints.push_back(old);
            endpoints.push_back(t);
        }
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

}  // namespace netsweep
