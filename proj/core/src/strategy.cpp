#include "netsweep/strategy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace netsweep {

void write_strategy(const SearchStrategy& s, const NodeIdMap& ids, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "s=" << s.searchers << " t=" << s.steps.size() << '\n';
    for (const auto& step : s.steps) {
        std::vector<std::int64_t> labels;
        labels.reserve(step.size());
        for (NodeId v : step) labels.push_back(ids.external(v));
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
        out << '\n';
    }
    if (!out) throw Error("write failure on " + path);
}

SearchStrategy read_strategy(const std::string& path, const NodeIdMap& ids) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw ParseError(path + ":1: missing header");
    int s = 0;
    std::size_t t = 0;
    if (std::sscanf(header.c_str(), "s=%d t=%zu", &s, &t) != 2)
        throw ParseError(path + ":1: expected header \"s=<searchers> t=<steps>\"");

    SearchStrategy strategy;
    strategy.searchers = s;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<NodeId> step;
        std::int64_t label;
        while (ls >> label) step.push_back(ids.internal(label));
        if (!ls.eof())
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected integer node labels");
        strategy.steps.push_back(std::move(step));
    }
    if (strategy.steps.size() != t)
        throw ParseError(path + ": header declares " + std::to_string(t) + " steps, found " +
                         std::to_string(strategy.steps.size()));
    return strategy;
}

}  // namespace netsweep
