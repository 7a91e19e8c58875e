#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "netsweep/decomposition.hpp"

using namespace netsweep;
using namespace netsweep::testing;

namespace {

std::vector<std::vector<std::int64_t>> chains_to_labels(
    const std::vector<std::vector<NodeId>>& chains, const NodeIdMap& ids) {
    return netsweep::testing::steps_to_labels(chains, ids);
}

bool same_section(const Section& a, const Section& b) {
    return a.kind == b.kind && a.tops == b.tops && a.bottoms == b.bottoms &&
           a.branches == b.branches;
}

}  // namespace

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("chains of the worked example") {
    LabeledGraph fig = nine_node_example();
    std::vector<std::vector<std::int64_t>> expected = {
        {1, 2, 4}, {3, 4}, {4, 5, 8}, {4, 6, 7}, {7, 8}, {7, 9}};
    CHECK(chains_to_labels(phase_one_sequences(fig.graph), fig.ids) == expected);
}

TEST_CASE("chains of paths and single edges") {
    using Chains = std::vector<std::vector<NodeId>>;
    CHECK(phase_one_sequences(make_graph(2, {{0, 1}})) == Chains{{0, 1}});
    CHECK(phase_one_sequences(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == Chains{{0, 1, 2, 3}});
    CHECK(phase_one_sequences(make_graph(3, {})) == Chains{});
    CHECK_THROWS_AS(phase_one_sequences(make_graph(2, {{0, 1}, {1, 0}})), DomainError);
}

TEST_CASE("chains cover each edge once and pass straight through interiors") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        NodeId n = 2 + static_cast<NodeId>(rng() % 19);
        DirectedGraph g = random_dag(n, 0.25, rng);
        std::vector<std::vector<NodeId>> chains = phase_one_sequences(g);
        std::multiset<std::pair<NodeId, NodeId>> covered;
        for (const auto& chain : chains) {
            REQUIRE(chain.size() >= 2);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                CHECK(g.has_edge(chain[i], chain[i + 1]));
                covered.insert({chain[i], chain[i + 1]});
            }
            for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
                CHECK(g.in_degree(chain[i]) == 1);
                CHECK(g.out_degree(chain[i]) == 1);
            }
        }
        CHECK(covered.size() == g.edge_count());
        CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
    }
}

TEST_CASE("sections of the worked example") {
    LabeledGraph fig = nine_node_example();
    Decomposition d = decompose(fig.graph);
    CHECK(d.diagnostics.empty());
    REQUIRE(d.sections.size() == 3);

    const Section& meet = d.sections[0];
    CHECK(meet.kind == SectionKind::ReverseBranch);
    CHECK(steps_to_labels({meet.tops}, fig.ids)[0] == std::vector<std::int64_t>{1, 3});
    CHECK(steps_to_labels({meet.bottoms}, fig.ids)[0] == std::vector<std::int64_t>{4});
    CHECK(steps_to_labels(meet.branches, fig.ids) ==
          std::vector<std::vector<std::int64_t>>{{1, 2, 4}, {3, 4}});

    const Section& fan = d.sections[1];
    CHECK(fan.kind == SectionKind::Branch);
    CHECK(steps_to_labels({fan.tops}, fig.ids)[0] == std::vector<std::int64_t>{4});
    CHECK(steps_to_labels({fan.bottoms}, fig.ids)[0] == std::vector<std::int64_t>{8, 7});
    CHECK(steps_to_labels(fan.branches, fig.ids) ==
          std::vector<std::vector<std::int64_t>>{{4, 5, 8}, {4, 6, 7}});

    const Section& tail = d.sections[2];
    CHECK(tail.kind == SectionKind::Branch);
    CHECK(steps_to_labels({tail.tops}, fig.ids)[0] == std::vector<std::int64_t>{7});
    CHECK(steps_to_labels(tail.branches, fig.ids) ==
          std::vector<std::vector<std::int64_t>>{{7, 8}, {7, 9}});

    CHECK(is_valid(fig.graph, d).valid);
    CHECK(is_minimal(fig.graph, d).minimal);
}

TEST_CASE("a lone chain is a path section") {
    DirectedGraph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Decomposition d = decompose(path);
    REQUIRE(d.sections.size() == 1);
    CHECK(d.sections[0].kind == SectionKind::Path);
    CHECK(d.sections[0].branches == std::vector<std::vector<NodeId>>{{0, 1, 2, 3}});
}

TEST_CASE("parallel internally disjoint routes form a diamond") {
    DirectedGraph dia = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    Decomposition d = decompose(dia);
    REQUIRE(d.sections.size() == 1);
    CHECK(d.sections[0].kind == SectionKind::Diamond);
    CHECK(d.sections[0].tops == std::vector<NodeId>{0});
    CHECK(d.sections[0].bottoms == std::vector<NodeId>{3});
}

TEST_CASE("chains sharing interiors fall back to a branching section") {
    Decomposition d = phase_two_sections({{0, 1, 3}, {0, 2, 3}, {0, 4, 2, 5, 3}});
    REQUIRE(d.sections.size() == 1);
    CHECK(d.sections[0].kind == SectionKind::Branch);
    CHECK(d.sections[0].branches.size() == 3);
    CHECK(d.diagnostics.size() == 1);
    CHECK_THROWS_AS(phase_two_sections({{0}}), DomainError);
}

TEST_CASE("node overlap counts meeting points of three or more sections") {
    LabeledGraph fig = nine_node_example();
    OverlapReport quiet = overlap_of(decompose(fig.graph), fig.graph.node_count());
    CHECK(quiet.omega == 0);
    CHECK(quiet.fraction == 0.0);
    CHECK(std::count(quiet.overlap.begin(), quiet.overlap.end(), 0) == 9);

    // two diamonds and a path all meeting at node 2
    DirectedGraph busy = make_graph(
        8, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {2, 4}, {4, 5}, {2, 6}, {6, 5}, {7, 2}});
    Decomposition d = decompose(busy);
    REQUIRE(d.sections.size() == 3);
    CHECK(d.sections[0].kind == SectionKind::Diamond);
    CHECK(d.sections[1].kind == SectionKind::Path);
    CHECK(d.sections[2].kind == SectionKind::Diamond);
    OverlapReport rep = overlap_of(d, busy.node_count());
    CHECK(rep.overlap[2] == 3);
    CHECK(rep.omega == 3);
    CHECK(rep.fraction == doctest::Approx(3.0 / 7.0));
    CHECK(is_valid(busy, d).valid);
    CHECK(is_minimal(busy, d).minimal);
}

TEST_CASE("validity rejects broken decompositions") {
    DirectedGraph path = make_graph(3, {{0, 1}, {1, 2}});
    Decomposition whole = decompose(path);

    Decomposition missing;  // leaves edge 1 -> 2 uncovered
    Section p;
    p.kind = SectionKind::Path;
    p.tops = {0};
    p.bottoms = {1};
    p.branches = {{0, 1}};
    missing.sections = {p};
    ValidityReport mr = is_valid(path, missing);
    CHECK_FALSE(mr.valid);
    CHECK(mr.problem.find("not covered") != std::string::npos);

    Decomposition doubled = whole;  // claims 0 -> 1 twice
    doubled.sections.push_back(p);
    doubled.sections.back().branches = {{0, 1}};
    doubled.sections.back().bottoms = {1};
    ValidityReport dr = is_valid(path, doubled);
    CHECK_FALSE(dr.valid);
    CHECK(dr.problem.find("covered 2 times") != std::string::npos);

    Decomposition phantom = whole;  // an edge the graph does not have
    phantom.sections[0].branches = {{0, 2}};
    phantom.sections[0].bottoms = {2};
    CHECK_FALSE(is_valid(path, phantom).valid);

    // a section touching another one at an interior node
    DirectedGraph tee = make_graph(4, {{0, 1}, {1, 2}, {1, 3}});
    Decomposition poked;
    Section long_path;
    long_path.kind = SectionKind::Path;
    long_path.tops = {0};
    long_path.bottoms = {2};
    long_path.branches = {{0, 1, 2}};
    Section stub;
    stub.kind = SectionKind::Path;
    stub.tops = {1};
    stub.bottoms = {3};
    stub.branches = {{1, 3}};
    poked.sections = {long_path, stub};
    ValidityReport pr = is_valid(tee, poked);
    CHECK_FALSE(pr.valid);
    CHECK(pr.problem.find("interior") != std::string::npos);

    CHECK_THROWS_AS(is_minimal(tee, poked), DomainError);
}

TEST_CASE("minimality spots mergeable neighbours") {
    // a path needlessly cut in half
    DirectedGraph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Decomposition halves;
    Section front, back;
    front.kind = SectionKind::Path;
    front.tops = {0};
    front.bottoms = {2};
    front.branches = {{0, 1, 2}};
    back.kind = SectionKind::Path;
    back.tops = {2};
    back.bottoms = {3};
    back.branches = {{2, 3}};
    halves.sections = {front, back};
    REQUIRE(is_valid(path, halves).valid);
    MinimalityReport hr = is_minimal(path, halves);
    CHECK_FALSE(hr.minimal);
    CHECK(hr.counterexample.find("path") != std::string::npos);

    // a fan with one spoke carved off as a path
    DirectedGraph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    Decomposition carved;
    Section fan, spoke;
    fan.kind = SectionKind::Branch;
    fan.tops = {0};
    fan.bottoms = {1, 2};
    fan.branches = {{0, 1}, {0, 2}};
    spoke.kind = SectionKind::Path;
    spoke.tops = {0};
    spoke.bottoms = {3};
    spoke.branches = {{0, 3}};
    carved.sections = {fan, spoke};
    REQUIRE(is_valid(star, carved).valid);
    MinimalityReport cr = is_minimal(star, carved);
    CHECK_FALSE(cr.minimal);
    CHECK(cr.counterexample.find("branching") != std::string::npos);

    // two stacked branchings really close into a diamond
    DirectedGraph dia = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    Decomposition open;
    Section top, bottom;
    top.kind = SectionKind::Branch;
    top.tops = {0};
    top.bottoms = {1, 2};
    top.branches = {{0, 1}, {0, 2}};
    bottom.kind = SectionKind::ReverseBranch;
    bottom.tops = {1, 2};
    bottom.bottoms = {3};
    bottom.branches = {{1, 3}, {2, 3}};
    open.sections = {top, bottom};
    REQUIRE(is_valid(dia, open).valid);
    MinimalityReport orp = is_minimal(dia, open);
    CHECK_FALSE(orp.minimal);
    CHECK(orp.counterexample.find("diamond") != std::string::npos);

    // two fans out of different hubs cannot be one section
    DirectedGraph twin = make_graph(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    Decomposition d = decompose(twin);
    REQUIRE(d.sections.size() == 2);
    CHECK(is_minimal(twin, d).minimal);
}

TEST_CASE("automatic decompositions are valid and minimal on random graphs") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 120; ++trial) {
        NodeId n = 2 + static_cast<NodeId>(rng() % 24);
        DirectedGraph g = random_dag(n, 0.2, rng);
        Decomposition d = decompose(g);

        // independent edge partition check
        std::multiset<std::pair<NodeId, NodeId>> covered;
        for (const Section& s : d.sections)
            for (const Edge& e : s.edges()) covered.insert({e.from, e.to});
        CHECK(covered.size() == g.edge_count());
        for (const Edge& e : g.edges()) CHECK(covered.count({e.from, e.to}) == 1);

        CHECK(is_valid(g, d).valid);
        CHECK(is_minimal(g, d).minimal);

        Decomposition again = decompose(g);
        REQUIRE(again.sections.size() == d.sections.size());
        for (std::size_t i = 0; i < d.sections.size(); ++i)
            CHECK(same_section(again.sections[i], d.sections[i]));
    }
}

TEST_SUITE_END();
