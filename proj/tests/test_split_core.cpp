#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "splitdiam/errors.hpp"
#include "splitdiam/generators.hpp"
#include "splitdiam/graph.hpp"
#include "splitdiam/split_graph.hpp"
#include "test_support.hpp"

using namespace splitdiam;
using namespace testsupport;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    const Graph g(3, {{1, 2}, {2, 3}});
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.connected());
    CHECK(!Graph(3, {{1, 2}}).connected());
}

TEST_CASE("split_partition on the complete graph K3") {
    const Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto p = split_partition(g);
    CHECK(p.clique == std::vector<int>{1, 2, 3});
    CHECK(p.stable.empty());
}

TEST_CASE("split_partition star: ties broken towards smallest ids") {
    // Star with center 1: valid partitions pair the center with one leaf.
    const Graph g(4, {{1, 2}, {1, 3}, {1, 4}});
    const auto valid = enumerate_split_partitions(g);
    CHECK(!valid.empty());
    const auto p = split_partition(g);
    const bool isValid = std::any_of(valid.begin(), valid.end(), [&](const SplitPartition& q) {
        return q.clique == p.clique && q.stable == p.stable;
    });
    CHECK(isValid);
    CHECK(p.clique == std::vector<int>{1, 2});
    CHECK(p.stable == std::vector<int>{3, 4});
}

TEST_CASE("split_partition rejects C4 and disconnected graphs") {
    CHECK_THROWS_AS(split_partition(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})), NotSplitError);
    CHECK_THROWS_AS(split_partition(Graph(4, {{1, 2}, {3, 4}})), DisconnectedError);
}

TEST_CASE("split_partition agrees with exhaustive enumeration on random graphs") {
    Rng rng(20240801);
    int splits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const Graph g = random_connected_graph(rng, n, 1 + static_cast<int>(rng.below(3)), 4);
        const auto valid = enumerate_split_partitions(g);
        if (valid.empty()) {
            CHECK_THROWS_AS(split_partition(g), NotSplitError);
        } else {
            ++splits;
            const auto p = split_partition(g);
            CHECK(std::any_of(valid.begin(), valid.end(), [&](const SplitPartition& q) {
                return q.clique == p.clique && q.stable == p.stable;
            }));
        }
    }
    CHECK(splits > 50); // the family must not be vacuous
}

TEST_CASE("sparse representation of the interval-but-not-clique-interval fixture") {
    const auto [g, p] = gen_fig1();
    const auto sg = sparse_representation(g, p);
    CHECK(sg.clique_size() == 4);
    CHECK(sg.stable_count() == 4);
    CHECK(std::vector<int>(sg.neighbours(1).begin(), sg.neighbours(1).end()) ==
          std::vector<int>{1, 2});
    CHECK(std::vector<int>(sg.neighbours(2).begin(), sg.neighbours(2).end()) ==
          std::vector<int>{1, 2, 3});
    CHECK(std::vector<int>(sg.neighbours(3).begin(), sg.neighbours(3).end()) ==
          std::vector<int>{2, 3, 4});
    CHECK(std::vector<int>(sg.neighbours(4).begin(), sg.neighbours(4).end()) ==
          std::vector<int>{2, 4});
}

TEST_CASE("sparse representation: complete graph and thin spider") {
    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto sg = sparse_representation(k3, split_partition(k3));
    CHECK(sg.clique_size() == 3);
    CHECK(sg.stable_count() == 0);

    const auto [sp, pp] = gen_thin_spider(3);
    const auto ss = sparse_representation(sp, pp);
    REQUIRE(ss.stable_count() == 3);
    for (int v = 1; v <= 3; ++v) CHECK(ss.degree(v) == 1);
}

TEST_CASE("sparse representation rejects invalid partitions") {
    const Graph g(3, {{1, 2}, {2, 3}});
    SplitPartition bad;
    bad.clique = {1, 3}; // not a clique
    bad.stable = {2};
    CHECK_THROWS_AS(sparse_representation(g, bad), InvalidPartitionError);
}

TEST_CASE("round-trip: sparse representation reconstructs the edge set") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sg = random_split(rng, 7, 7);
        const Graph g = expand(sg);
        const auto p = split_partition(g);
        const auto sg2 = sparse_representation(g, p);
        CHECK(expand(sg2).edges() == g.edges());
    }
}

TEST_CASE("diameter_naive fixtures") {
    const auto [g1, p1] = gen_fig1();
    CHECK(diameter_naive(sparse_representation(g1, p1)).value == 2);

    const auto [g2, p2] = gen_sun(4);
    const auto r2 = diameter_naive(sparse_representation(g2, p2));
    CHECK(r2.value == 3);
    REQUIRE(r2.witness.has_value());
    CHECK(oracle_stable_ecc(sparse_representation(g2, p2), *r2.witness - 4) == 3);

    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(diameter_naive(sparse_representation(k3, split_partition(k3))).value == 1);

    const auto single = SparseSplitGraph::with_canonical_ids(1, {});
    CHECK(diameter_naive(single).value == 0);
}

TEST_CASE("diameter_naive equals the queue-BFS oracle on random graphs") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto sg = random_split(rng, 8, 8);
        const auto res = diameter_naive(sg);
        CHECK(res.value == oracle_diameter(sg));
        CHECK(res.value <= 3);
        if (sg.stable_count() > 0) CHECK(res.value >= 2);
        if (res.value == 3) {
            REQUIRE(res.witness.has_value());
            CHECK(oracle_stable_ecc(sg, *res.witness - sg.clique_size()) == 3);
        }
    }
}

TEST_CASE("universal_vertex fixtures") {
    const auto [g1, p1] = gen_fig1();
    CHECK(universal_vertex(sparse_representation(g1, p1)) == 2);

    const auto [g2, p2] = gen_sun(3);
    CHECK(!universal_vertex(sparse_representation(g2, p2)).has_value());

    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(universal_vertex(sparse_representation(k3, split_partition(k3))) == 1);
}

TEST_CASE("universal_vertex means some clique vertex covers all of S") {
    Rng rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto sg = random_split(rng, 7, 7);
        const auto u = universal_vertex(sg);
        const Graph g = expand(sg);
        bool any = false;
        for (int idx = 1; idx <= sg.clique_size() && !any; ++idx)
            any = g.degree(idx) == g.vertex_count() - 1;
        CHECK(u.has_value() == any);
        if (u) CHECK(g.degree(*u) == g.vertex_count() - 1);
    }
}

TEST_CASE("3-sun: diameter two without a universal vertex") {
    // Negative control: the universal-vertex criterion must not be applied
    // outside width-1 instances.
    const auto [g, p] = gen_sun(3);
    const auto sg = sparse_representation(g, p);
    CHECK(diameter_naive(sg).value == 2);
    CHECK(!universal_vertex(sg).has_value());
}
