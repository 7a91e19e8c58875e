#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "netsweep/baselines.hpp"
#include "netsweep/decomposition.hpp"
#include "netsweep/dynamics.hpp"
#include "netsweep/generators.hpp"
#include "netsweep/plank.hpp"
#include "netsweep/sweep.hpp"

namespace netsweep {

namespace {

struct GraphOptions {
    std::string input;
    bool reverse = false;
    bool lcc = false;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    cmd->add_option("-i,--input", opts.input, "edge list file (\"u v\" per line)")->required();
    cmd->add_flag("--reverse", opts.reverse, "flip every edge while loading");
    cmd->add_flag("--lcc", opts.lcc, "keep only the largest weakly connected component");
}

struct LoadedGraph {
    DirectedGraph graph;
    NodeIdMap ids;
};

LoadedGraph load_graph(const GraphOptions& opts) {
    LoadResult loaded = load_edge_list(opts.input, opts.reverse);
    if (!opts.lcc) return {std::move(loaded.graph), std::move(loaded.ids)};

    std::vector<NodeId> keep = largest_weak_component(loaded.graph);
    std::vector<char> kept(loaded.graph.node_count(), 0);
    for (NodeId v : keep) kept[v] = 1;
    std::vector<NodeId> remove;
    for (NodeId v = 0; v < loaded.graph.node_count(); ++v)
        if (!kept[v]) remove.push_back(v);
    if (remove.empty()) return {std::move(loaded.graph), std::move(loaded.ids)};

    SubgraphResult sub = induced_subgraph(loaded.graph, remove);
    NodeIdMap ids;
    for (NodeId v : sub.to_parent) ids.intern(loaded.ids.external(v));
    return {std::move(sub.graph), std::move(ids)};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"strategies that clear contamination from directed networks"};
    app.require_subcommand(1);

    // ---- clear: full pipeline on an arbitrary digraph ----
    GraphOptions clear_graph;
    int clear_s = 0, clear_k = 0;
    std::string clear_output, clear_plan, clear_schedule;
    CLI::App* clear = app.add_subcommand("clear", "guard a cycle cover, sweep the remainder");
    add_graph_options(clear, clear_graph);
    clear->add_option("-s,--searchers", clear_s, "sliding searchers (at least 2)")->required();
    clear->add_option("-k,--hubset-k", clear_k, "extra high-degree nodes to guard");
    clear->add_option("-o,--output", clear_output, "write the combined strategy here");
    clear->add_option("--plan", clear_plan, "write the guard plan here");
    clear->add_option("--schedule", clear_schedule, "write the guard activation windows here");

    // ---- plank: strategy for an acyclic graph ----
    GraphOptions plank_graph;
    int plank_s = 0;
    std::string plank_output;
    CLI::App* plank_cmd = app.add_subcommand("plank", "sweep an acyclic graph step by step");
    add_graph_options(plank_cmd, plank_graph);
    plank_cmd->add_option("-s,--searchers", plank_s, "searchers (at least 2)")->required();
    plank_cmd->add_option("-o,--output", plank_output, "write the strategy here");

    // ---- decompose ----
    GraphOptions dec_graph;
    std::string dec_output;
    CLI::App* dec = app.add_subcommand("decompose", "split an acyclic graph into sections");
    add_graph_options(dec, dec_graph);
    dec->add_option("-o,--output", dec_output, "write the sections here");

    // ---- validate ----
    GraphOptions val_graph;
    std::string val_strategy;
    CLI::App* val = app.add_subcommand("validate", "check a strategy against a graph");
    add_graph_options(val, val_graph);
    val->add_option("--strategy", val_strategy, "strategy file to check")->required();

    // ---- lower-bound ----
    long long lb_n = 0;
    int lb_s = 0;
    CLI::App* lb = app.add_subcommand("lower-bound", "fewest steps any strategy needs");
    lb->add_option("n", lb_n, "node count")->required();
    lb->add_option("s", lb_s, "searchers")->required();

    // ---- exact ----
    GraphOptions exact_graph;
    int exact_s = 0;
    long long exact_max = 30;
    std::string exact_output;
    CLI::App* exact = app.add_subcommand("exact", "optimal step count by exhaustive search");
    add_graph_options(exact, exact_graph);
    exact->add_option("-s,--searchers", exact_s, "searchers (at least 2)")->required();
    exact->add_option("--max-steps", exact_max, "give up beyond this many steps");
    exact->add_option("-o,--output", exact_output, "write an optimal strategy here");

    // ---- gen ----
    std::string gen_model, gen_output;
    NodeId gen_n = 0;
    double gen_p = 0.0;
    int gen_m = 1, gen_m0 = 1;
    std::uint64_t gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate a random acyclic graph");
    gen->add_option("model", gen_model, "er (ordered Erdos-Renyi) or ba (preferential attachment)")
        ->required()
        ->check(CLI::IsMember({"er", "ba"}));
    gen->add_option("-n,--nodes", gen_n, "node count")->required();
    gen->add_option("-p,--probability", gen_p, "edge probability (er)");
    gen->add_option("--links", gen_m, "links per new node (ba)");
    gen->add_option("--seed-nodes", gen_m0, "initial nodes (ba)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_output, "write the edge list here")->required();

    // ---- sweep ----
    std::string sweep_config, sweep_output;
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid and emit CSV");
    sweep->add_option("-c,--config", sweep_config, "key=value grid description")->required();
    sweep->add_option("-o,--output", sweep_output, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*clear) {
            LoadedGraph lg = load_graph(clear_graph);
            SearchOutcome outcome = search_digraph(lg.graph, clear_s, clear_k);
            out << "nodes " << lg.graph.node_count() << ", edges " << lg.graph.edge_count()
                << ", guards " << outcome.plan.guards.size() << " (cover "
                << outcome.plan.cycle_cover.size() << ", hubs " << outcome.plan.hubs.size()
                << ")\n";
            out << "steps " << outcome.strategy.steps.size() << ", searchers "
                << outcome.strategy.searchers << ", peak concurrent "
                << outcome.schedule.peak_concurrent << '\n';
            if (!outcome.report.ok) {
                err << "strategy failed validation: " << outcome.report.message << '\n';
                return 1;
            }
            if (!clear_output.empty()) write_strategy(outcome.strategy, lg.ids, clear_output);
            if (!clear_plan.empty()) write_plan(outcome.plan, lg.graph, lg.ids, clear_plan);
            if (!clear_schedule.empty()) {
                std::ofstream sched(clear_schedule);
                if (!sched) throw Error("cannot write " + clear_schedule);
                sched << "peak=" << outcome.schedule.peak_concurrent
                      << " guards=" << outcome.schedule.guards.size() << '\n';
                for (std::size_t i = 0; i < outcome.schedule.guards.size(); ++i)
                    sched << lg.ids.external(outcome.schedule.guards[i]) << ' '
                          << outcome.schedule.activation[i] << ' '
                          << outcome.schedule.deactivation[i] << '\n';
            }
        } else if (*plank_cmd) {
            LoadedGraph lg = load_graph(plank_graph);
            SearchStrategy strategy = plank(lg.graph, plank_s);
            ValidationReport report = validate(lg.graph, strategy);
            out << "steps " << strategy.steps.size() << ", searchers " << strategy.searchers
                << (report.ok ? "" : " (INVALID)") << '\n';
            if (!plank_output.empty()) write_strategy(strategy, lg.ids, plank_output);
            if (!report.ok) {
                err << "strategy failed validation: " << report.message << '\n';
                return 1;
            }
        } else if (*dec) {
            LoadedGraph lg = load_graph(dec_graph);
            Decomposition d = decompose(lg.graph);
            OverlapReport overlap = overlap_of(d, lg.graph.node_count());
            std::size_t counts[4] = {0, 0, 0, 0};
            for (const Section& s : d.sections) {
                if (s.kind == SectionKind::Branch) ++counts[0];
                if (s.kind == SectionKind::ReverseBranch) ++counts[1];
                if (s.kind == SectionKind::Diamond) ++counts[2];
                if (s.kind == SectionKind::Path) ++counts[3];
            }
            out << "sections " << d.sections.size() << " (branching " << counts[0]
                << ", reverse " << counts[1] << ", diamond " << counts[2] << ", path "
                << counts[3] << ")\n";
            out << "overlap " << overlap.omega << ", fraction " << overlap.fraction << '\n';
            for (const std::string& note : d.diagnostics) out << "note: " << note << '\n';
            if (!dec_output.empty()) write_decomposition(d, lg.ids, dec_output);
        } else if (*val) {
            LoadedGraph lg = load_graph(val_graph);
            SearchStrategy strategy = read_strategy(val_strategy, lg.ids);
            ValidationReport report = validate(lg.graph, strategy);
            out << (report.ok ? "valid" : "invalid") << ": " << report.message << '\n';
            if (!report.ok) {
                if (!report.witness.empty()) {
                    out << "unguarded path:";
                    for (NodeId v : report.witness) out << ' ' << lg.ids.external(v);
                    out << '\n';
                }
                return 1;
            }
        } else if (*lb) {
            out << lower_bound(lb_n, lb_s) << '\n';
        } else if (*exact) {
            LoadedGraph lg = load_graph(exact_graph);
            OracleResult result = exact_search_time(lg.graph, exact_s, exact_max);
            if (result.exceeded) {
                err << "no strategy within " << exact_max << " steps\n";
                return 1;
            }
            out << "optimal steps " << result.length << " (" << result.explored
                << " states explored)\n";
            if (!exact_output.empty()) write_strategy(result.witness, lg.ids, exact_output);
        } else if (*gen) {
            DirectedGraph g = gen_model == "er" ? gen_ordered_er(gen_n, gen_p, gen_seed)
                                                : gen_ba_dag(gen_n, gen_m, gen_m0, gen_seed);
            write_edge_list(g, NodeIdMap::identity(g.node_count()), gen_output);
            out << "nodes " << g.node_count() << ", edges " << g.edge_count() << '\n';
        } else if (*sweep) {
            SweepConfig config = parse_sweep_config(sweep_config);
            if (sweep_output.empty()) {
                run_sweep(config, out);
            } else {
                std::ofstream csv(sweep_output);
                if (!csv) throw Error("cannot write " + sweep_output);
                run_sweep(config, csv);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace netsweep
