#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "netsweep/generators.hpp"

using namespace netsweep;
using namespace netsweep::testing;

TEST_SUITE_BEGIN("generators");

TEST_CASE("ordered random graph edge cases") {
    CHECK(gen_ordered_er(5, 0.0, 7).edge_count() == 0);

    DirectedGraph full = gen_ordered_er(4, 1.0, 7);
    CHECK(full.edge_count() == 6);
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) CHECK(full.has_edge(i, j));

    CHECK(gen_ordered_er(1, 0.5, 7).node_count() == 1);
    CHECK_THROWS_AS(gen_ordered_er(0, 0.5, 7), DomainError);
    CHECK_THROWS_AS(gen_ordered_er(5, -0.1, 7), DomainError);
    CHECK_THROWS_AS(gen_ordered_er(5, 1.5, 7), DomainError);
}

TEST_CASE("ordered random graph edges always climb") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        DirectedGraph g = gen_ordered_er(40, 0.15, seed);
        for (const Edge& e : g.edges()) CHECK(e.from < e.to);
        CHECK(ref_is_acyclic(g));
    }
}

TEST_CASE("ordered random graph hits its expected density") {
    // n = 1000, p = 1/n: about (n-1)/2 = 499.5 edges expected with a standard
    // deviation near 22; four deviations of slack keeps fixed seeds green.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        EdgeId m = gen_ordered_er(1000, 0.001, seed).edge_count();
        CHECK(m > 410);
        CHECK(m < 589);
    }
}

TEST_CASE("ordered random graph is reproducible and documented draw-for-draw") {
    DirectedGraph a = gen_ordered_er(30, 0.2, 99);
    DirectedGraph b = gen_ordered_er(30, 0.2, 99);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != gen_ordered_er(30, 0.2, 100).edges());

    // one mt19937_64 draw per ascending pair, top 53 bits as the uniform
    std::mt19937_64 rng(99);
    std::vector<Edge> expected;
    for (NodeId i = 0; i < 30; ++i)
        for (NodeId j = i + 1; j < 30; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < 0.2) expected.push_back({i, j});
        }
    CHECK(a.edges() == expected);
}

TEST_CASE("attachment graph shape") {
    CHECK(gen_ba_dag(5, 2, 5, 3).edge_count() == 0);  // no joiners

    DirectedGraph g = gen_ba_dag(50, 3, 4, 11);
    CHECK(g.node_count() == 50);
    CHECK(g.edge_count() == 3 * (50 - 4));
    for (const Edge& e : g.edges()) {
        CHECK(e.from < e.to);
        CHECK(e.to >= 4);  // seed nodes never gain in-edges
    }
    for (NodeId t = 4; t < 50; ++t) {
        CHECK(g.in_degree(t) == 3);  // m_links distinct sponsors each
        std::set<NodeId> sponsors(g.in_neighbors(t).begin(), g.in_neighbors(t).end());
        CHECK(sponsors.size() == 3);
    }
    CHECK(ref_is_acyclic(g));
}

TEST_CASE("attachment graph rejects bad parameters") {
    CHECK_THROWS_AS(gen_ba_dag(10, 0, 2, 1), DomainError);
    CHECK_THROWS_AS(gen_ba_dag(10, 3, 2, 1), DomainError);
    CHECK_THROWS_AS(gen_ba_dag(3, 2, 4, 1), DomainError);
}

TEST_CASE("attachment graph is reproducible and documented draw-for-draw") {
    DirectedGraph a = gen_ba_dag(40, 2, 3, 17);
    CHECK(a.edges() == gen_ba_dag(40, 2, 3, 17).edges());
    CHECK(a.edges() != gen_ba_dag(40, 2, 3, 18).edges());

    // replicate the documented sampling loop: degree-biased draws from the
    // endpoint multiset, uniform over nodes while it is empty, rejecting
    // repeats, sponsors sorted before insertion
    std::mt19937_64 rng(17);
    std::vector<Edge> expected;
    std::vector<NodeId> endpoints;
    for (NodeId t = 3; t < 40; ++t) {
        std::vector<NodeId> targets;
        while (targets.size() < 2) {
            NodeId candidate = endpoints.empty()
                                   ? static_cast<NodeId>(rng() % t)
                                   : endpoints[rng() % endpoints.size()];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        std::sort(targets.begin(), targets.end());
        for (NodeId old : targets) {
            expected.push_back({old, t});
            endpoints.push_back(old);
            endpoints.push_back(t);
        }
    }
    std::sort(expected.begin(), expected.end(), [](const Edge& x, const Edge& y) {
        return x.from < y.from || (x.from == y.from && x.to < y.to);
    });
    CHECK(a.edges() == expected);
}

TEST_SUITE_END();
