// Search strategies: per-step guard placements plus text serialization.
#ifndef NETSWEEP_STRATEGY_HPP
#define NETSWEEP_STRATEGY_HPP

#include <string>
#include <vector>

#include "netsweep/graph.hpp"

namespace netsweep {

// A strategy places at most `searchers` guards per step; the contamination
// dynamics decide what those placements clear. Node order inside a step is
// the construction order (serialization sorts, the dynamics do not care).
struct SearchStrategy {
    int searchers = 0;
    std::vector<std::vector<NodeId>> steps;

    // Number of placement steps.
    std::size_t length() const { return steps.size(); }
};

// Writes "s=<searchers> t=<steps>" then one line per step with external node
// labels in ascending label order.
void write_strategy(const SearchStrategy& s, const NodeIdMap& ids, const std::string& path);

// Inverse of write_strategy; labels are mapped through `ids` and must be
// known. Throws ParseError on malformed input.
SearchStrategy read_strategy(const std::string& path, const NodeIdMap& ids);

}  // namespace netsweep

#endif  // NETSWEEP_STRATEGY_HPP
