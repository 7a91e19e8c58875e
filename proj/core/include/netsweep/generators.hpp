// Deterministic random graph generators used by the sweep driver and the
// test corpora. Both emit acyclic graphs: edges always point from smaller to
// larger node id (ordered Erdos-Renyi) or from old node to new node
// (preferential attachment).
#ifndef NETSWEEP_GENERATORS_HPP
#define NETSWEEP_GENERATORS_HPP

#include <cstdint>

#include "netsweep/graph.hpp"

namespace netsweep {

// Each ordered pair (i, j) with i < j becomes an edge i -> j with
// probability p, decided by one draw of a seeded mt19937_64 walking i outer,
// j inner. Throws DomainError unless n >= 1 and 0 <= p <= 1.
DirectedGraph gen_ordered_er(NodeId n, double p, std::uint64_t seed);

// Preferential attachment: nodes m0..n-1 join in order, each linking to
// m_links distinct existing nodes drawn from the endpoint multiset of the
// edges so far (uniformly over existing nodes while that multiset is empty);
// every edge runs old -> new. Exactly m_links * (n - m0) edges. Throws
// DomainError unless 1 <= m_links <= m0 <= n.
DirectedGraph gen_ba_dag(NodeId n, int m_links, int m0, std::uint64_t seed);

}  // namespace netsweep

#endif  // NETSWEEP_GENERATORS_HPP
