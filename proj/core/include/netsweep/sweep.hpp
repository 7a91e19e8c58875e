// Parameter-sweep driver: reads a key=value config describing a grid of
// graphs, searcher budgets and guard settings, runs the full pipeline on
// every cell and writes one CSV row per (cell, seed) plus an averaged row
// per cell. Output is deterministic byte for byte.
#ifndef NETSWEEP_SWEEP_HPP
#define NETSWEEP_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netsweep/graph.hpp"

namespace netsweep {

struct ProbabilitySpec {
    double value = 0.0;
    bool over_n = false;  // "1.5/n" style entries: value divided by the cell's n
};

struct SearcherSpec {
    double value = 0.0;
    bool percent = false;  // "5%" style entries: percentage of the graph's node count
};

struct SweepConfig {
    enum class Source { ErdosRenyi, PreferentialAttachment, File };
    Source source = Source::ErdosRenyi;
    std::string path;      // file source: edge list to load
    bool reverse = false;  // flip every edge
    bool lcc = false;      // keep only the largest weakly connected component
    std::vector<NodeId> n;
    std::vector<ProbabilitySpec> p;  // er source
    int ba_m = 1;                    // links per new node (ba source)
    int ba_m0 = 1;                   // seed nodes (ba source)
    std::vector<SearcherSpec> s;
    std::vector<int> k{0};           // hubset sizes; 0 = cycle cover only
    std::vector<std::uint64_t> seeds;
};

// Parses "key = value" lines ('#' comments, blank lines ignored). Throws
// ParseError on unknown keys or malformed values and DomainError when
// required keys for the chosen source are missing.
SweepConfig parse_sweep_config(const std::string& path);

// Header: n,m,s,k,fvs_size,hubset_size,strategy_length,lower_bound,ratio,
// total_loss,peak_searchers,f_o,seed,error. Cells that fail carry the error
// message in the last column; after each cell's seed rows an averaged row
// (seed column "avg") summarizes the successful seeds.
void run_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace netsweep

#endif  // NETSWEEP_SWEEP_HPP
