#include "netsweep/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "netsweep/baselines.hpp"
#include "netsweep/decomposition.hpp"
#include "netsweep/dynamics.hpp"
#include "netsweep/generators.hpp"
#include "netsweep/plank.hpp"

namespace netsweep {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

template <typename T, typename Fn>
std::vector<T> parse_list(const std::string& text, const std::string& key, Fn parse_one) {
    std::vector<T> result;
    for (const std::string& item : split_list(text)) {
        try {
            result.push_back(parse_one(item));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad value '" + item + "' for key '" + key + "'");
        }
    }
    if (result.empty()) throw ParseError("empty list for key '" + key + "'");
    return result;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    SweepConfig config;
    bool saw_n = false, saw_p = false, saw_s = false, saw_seeds = false, saw_source = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        const std::string where = path + ":" + std::to_string(line_no);

        if (key == "source") {
            saw_source = true;
            if (value == "er")
                config.source = SweepConfig::Source::ErdosRenyi;
            else if (value == "ba")
                config.source = SweepConfig::Source::PreferentialAttachment;
            else if (value == "file")
                config.source = SweepConfig::Source::File;
            else
                throw ParseError(where + ": source must be er, ba or file");
        } else if (key == "path") {
            config.path = value;
        } else if (key == "reverse") {
            config.reverse = value == "1" || value == "true";
        } else if (key == "lcc") {
            config.lcc = value == "1" || value == "true";
        } else if (key == "n") {
            saw_n = true;
            config.n = parse_list<NodeId>(value, key, [](const std::string& item) {
                long long v = std::stoll(item);
                if (v < 1) throw ParseError("n entries must be positive");
                return static_cast<NodeId>(v);
            });
        } else if (key == "p") {
            saw_p = true;
            config.p = parse_list<ProbabilitySpec>(value, key, [](const std::string& item) {
                ProbabilitySpec spec;
                std::string number = item;
                if (item.size() > 2 && item.substr(item.size() - 2) == "/n") {
                    spec.over_n = true;
                    number = trim(item.substr(0, item.size() - 2));
                }
                spec.value = std::stod(number);
                return spec;
            });
        } else if (key == "ba_m") {
            config.ba_m = std::stoi(value);
        } else if (key == "ba_m0") {
            config.ba_m0 = std::stoi(value);
        } else if (key == "s") {
            saw_s = true;
            config.s = parse_list<SearcherSpec>(value, key, [](const std::string& item) {
                SearcherSpec spec;
                std::string number = item;
                if (!item.empty() && item.back() == '%') {
                    spec.percent = true;
                    number = trim(item.substr(0, item.size() - 1));
                }
                spec.value = std::stod(number);
                return spec;
            });
        } else if (key == "k") {
            config.k = parse_list<int>(value, key,
                                       [](const std::string& item) { return std::stoi(item); });
        } else if (key == "seeds") {
            saw_seeds = true;
            config.seeds = parse_list<std::uint64_t>(value, key, [](const std::string& item) {
                return static_cast<std::uint64_t>(std::stoull(item));
            });
        } else {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }

    if (!saw_source) throw DomainError(path + ": missing key 'source'");
    if (!saw_s) throw DomainError(path + ": missing key 's'");
    if (config.k.empty()) config.k = {0};
    const bool generated = config.source != SweepConfig::Source::File;
    if (generated && !saw_n) throw DomainError(path + ": missing key 'n'");
    if (generated && !saw_seeds) throw DomainError(path + ": missing key 'seeds'");
    if (config.source == SweepConfig::Source::ErdosRenyi && !saw_p)
        throw DomainError(path + ": missing key 'p' for source=er");
    if (config.source == SweepConfig::Source::File && config.path.empty())
        throw DomainError(path + ": missing key 'path' for source=file");
    return config;
}

namespace {

DirectedGraph reverse_graph(const DirectedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({e.to, e.from});
    return DirectedGraph::from_edges(g.node_count(), std::move(edges));
}

DirectedGraph restrict_to_lcc(const DirectedGraph& g) {
    std::vector<NodeId> keep = largest_weak_component(g);
    std::vector<char> kept(g.node_count(), 0);
    for (NodeId v : keep) kept[v] = 1;
    std::vector<NodeId> remove;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!kept[v]) remove.push_back(v);
    if (remove.empty()) return g;
    return induced_subgraph(g, remove).graph;
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

// One cell evaluated under one seed; numeric metrics are kept as doubles so
// the averaged row can reuse the same formatting.
struct CellMetrics {
    double n = 0, m = 0, s = 0, k = 0;
    double fvs_size = 0, hubset_size = 0;
    double strategy_length = 0, lower_bound_steps = 0, ratio = 0;
    double total_loss = 0, peak_searchers = 0, f_o = 0;
};

void write_row(std::ostream& out, const CellMetrics& mm, const std::string& seed,
               const std::string& error) {
    out << format_double(mm.n) << ',' << format_double(mm.m) << ',' << format_double(mm.s) << ','
        << format_double(mm.k) << ',' << format_double(mm.fvs_size) << ','
        << format_double(mm.hubset_size) << ',' << format_double(mm.strategy_length) << ','
        << format_double(mm.lower_bound_steps) << ',' << format_double(mm.ratio) << ','
        << format_double(mm.total_loss) << ',' << format_double(mm.peak_searchers) << ','
        << format_double(mm.f_o) << ',' << seed << ',' << error << '\n';
}

void write_error_row(std::ostream& out, NodeId n, double s_value, int k,
                     const std::string& seed, std::string error) {
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out << n << ",,";
    out << format_double(s_value) << ',' << k << ",,,,,,,,," << seed << ',' << error << '\n';
}

CellMetrics evaluate_cell(const DirectedGraph& g, int s, int k) {
    CellMetrics mm;
    mm.n = g.node_count();
    mm.m = g.edge_count();
    mm.s = s;
    mm.k = k;

    const bool cyclic = !topological_order(g).is_dag();
    DirectedGraph dag;
    SearchStrategy dag_strategy;
    if (k > 0 || cyclic) {
        SearchOutcome outcome = search_digraph(g, s, k);
        if (!outcome.report.ok)
            throw Error("pipeline strategy failed validation: " + outcome.report.message);
        mm.fvs_size = static_cast<double>(outcome.plan.cycle_cover.size());
        mm.hubset_size = static_cast<double>(outcome.plan.hubs.size());
        mm.strategy_length = static_cast<double>(outcome.strategy.steps.size());
        mm.peak_searchers = static_cast<double>(outcome.schedule.peak_concurrent);
        dag = std::move(outcome.plan.dag);
        dag_strategy = std::move(outcome.dag_strategy);
    } else {
        dag = g;
        dag_strategy = plank(g, s);
        ValidationReport report = validate(g, dag_strategy);
        if (!report.ok) throw Error("strategy failed validation: " + report.message);
        mm.strategy_length = static_cast<double>(dag_strategy.steps.size());
        mm.peak_searchers = s;
    }

    mm.lower_bound_steps = static_cast<double>(lower_bound(g.node_count(), s));
    mm.ratio = mm.strategy_length / mm.lower_bound_steps;
    mm.total_loss = static_cast<double>(
        loss_of(simulate(dag, dag_strategy), dag_strategy, dag.node_count()).total_loss);
    mm.f_o = overlap_of(decompose(dag), dag.node_count()).fraction;
    return mm;
}

}  // namespace

void run_sweep(const SweepConfig& config, std::ostream& out) {
    out << "n,m,s,k,fvs_size,hubset_size,strategy_length,lower_bound,ratio,total_loss,"
           "peak_searchers,f_o,seed,error\n";

    const bool from_file = config.source == SweepConfig::Source::File;
    DirectedGraph file_graph;
    if (from_file) {
        file_graph = load_edge_list(config.path, config.reverse).graph;
        if (config.lcc) file_graph = restrict_to_lcc(file_graph);
    }

    std::vector<NodeId> n_values = from_file ? std::vector<NodeId>{file_graph.node_count()}
                                             : config.n;
    std::vector<ProbabilitySpec> p_values =
        config.source == SweepConfig::Source::ErdosRenyi ? config.p
                                                         : std::vector<ProbabilitySpec>{{}};
    std::vector<std::uint64_t> seeds = from_file ? std::vector<std::uint64_t>{0} : config.seeds;

    for (NodeId n : n_values) {
        for (const ProbabilitySpec& pspec : p_values) {
            for (const SearcherSpec& sspec : config.s) {
                for (int k : config.k) {
                    std::vector<CellMetrics> successes;
                    for (std::uint64_t seed : seeds) {
                        const std::string seed_text = from_file ? "-" : std::to_string(seed);
                        try {
                            DirectedGraph g;
                            if (from_file) {
                                g = file_graph;
                            } else if (config.source == SweepConfig::Source::ErdosRenyi) {
                                double p = pspec.over_n ? pspec.value / n : pspec.value;
                                g = gen_ordered_er(n, p, seed);
                            } else {
                                g = gen_ba_dag(n, config.ba_m, config.ba_m0, seed);
                            }
                            if (!from_file) {
                                if (config.reverse) g = reverse_graph(g);
                                if (config.lcc) g = restrict_to_lcc(g);
                            }
                            int s = sspec.percent
                                        ? static_cast<int>(std::max<long long>(
                                              2, std::llround(g.node_count() * sspec.value / 100.0)))
                                        : static_cast<int>(sspec.value);
                            CellMetrics mm = evaluate_cell(g, s, k);
                            successes.push_back(mm);
                            write_row(out, mm, seed_text, "");
                        } catch (const Error& e) {
                            write_error_row(out, n, sspec.value, k, seed_text, e.what());
                        }
                    }
                    if (!from_file && !successes.empty()) {
                        CellMetrics avg;
                        for (const CellMetrics& mm : successes) {
                            avg.n += mm.n;
                            avg.m += mm.m;
                            avg.s += mm.s;
                            avg.k += mm.k;
                            avg.fvs_size += mm.fvs_size;
                            avg.hubset_size += mm.hubset_size;
                            avg.strategy_length += mm.strategy_length;
                            avg.lower_bound_steps += mm.lower_bound_steps;
                            avg.ratio += mm.ratio;
                            avg.total_loss += mm.total_loss;
                            avg.peak_searchers += mm.peak_searchers;
                            avg.f_o += mm.f_o;
                        }
                        const double count = static_cast<double>(successes.size());
                        avg.n /= count;
                        avg.m /= count;
                        avg.s /= count;
                        avg.k /= count;
                        avg.fvs_size /= count;
                        avg.hubset_size /= count;
                        avg.strategy_length /= count;
                        avg.lower_bound_steps /= count;
                        avg.ratio /= count;
                        avg.total_loss /= count;
                        avg.peak_searchers /= count;
                        avg.f_o /= count;
                        write_row(out, avg, "avg", "");
                    }
                }
            }
        }
    }
}

}  // namespace netsweep
