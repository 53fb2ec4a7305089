#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitdiam/errors.hpp"
#include "splitdiam/generators.hpp"
#include "splitdiam/ordering.hpp"
#include "test_support.hpp"

using namespace splitdiam;
using namespace testsupport;

namespace {

SparseSplitGraph fig1() {
    const auto [g, p] = gen_fig1();
    return sparse_representation(g, p);
}

// Independent run counter: positions of N(v), sorted, counted by scanning.
int oracle_runs(const SparseSplitGraph& sg, const CliqueOrdering& tau, int v) {
    std::vector<int> ps;
    for (int idx : sg.neighbours(v)) ps.push_back(tau.pos[idx]);
    std::sort(ps.begin(), ps.end());
    int runs = 0;
    for (size_t i = 0; i < ps.size(); ++i)
        if (i == 0 || ps[i] != ps[i - 1] + 1) ++runs;
    return runs;
}

int oracle_width(const SparseSplitGraph& sg, const CliqueOrdering& tau) {
    int w = 0;
    for (int v = 1; v <= sg.stable_count(); ++v) w = std::max(w, oracle_runs(sg, tau, v));
    return w;
}

// Minimum width over all permutations, by full enumeration (no symmetry
// reduction), used to check the reduced production search.
int oracle_ci_number(const SparseSplitGraph& sg) {
    const int k = sg.clique_size();
    std::vector<int> seq(static_cast<size_t>(k));
    std::iota(seq.begin(), seq.end(), 1);
    int best = k + 1;
    do {
        best = std::min(best, oracle_width(sg, CliqueOrdering::from_sequence(seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

} // namespace

TEST_CASE("decompose_intervals on the fig1 fixture") {
    const auto sg = fig1();
    const auto tau = CliqueOrdering::identity(4);
    // v=b has neighbours {1,2,3}: one run.
    CHECK(decompose_intervals(sg, tau, 2).runs == std::vector<std::pair<int, int>>{{1, 3}});
    // v=d has neighbours {2,4}: two singleton runs.
    CHECK(decompose_intervals(sg, tau, 4).runs ==
          std::vector<std::pair<int, int>>{{2, 2}, {4, 4}});
}

TEST_CASE("decompose_intervals: missing interior vertex splits the run") {
    const auto sg = SparseSplitGraph::with_canonical_ids(4, {{1, 2, 4}});
    const auto ivs = decompose_intervals(sg, CliqueOrdering::identity(4), 1);
    CHECK(ivs.runs == std::vector<std::pair<int, int>>{{1, 2}, {4, 4}});
}

TEST_CASE("interval decompositions are maximal runs") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto sg = random_split(rng, 8, 6);
        std::vector<int> seq(static_cast<size_t>(sg.clique_size()));
        std::iota(seq.begin(), seq.end(), 1);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[rng.below(i)]);
            const auto tau = CliqueOrdering::from_sequence(seq);
            for (int v = 1; v <= sg.stable_count(); ++v) {
                const auto ivs = decompose_intervals(sg, tau, v);
                int covered = 0;
                for (size_t i = 0; i < ivs.runs.size(); ++i) {
                    const auto [l, u] = ivs.runs[i];
                    CHECK(l <= u);
                    covered += u - l + 1;
                    if (i > 0) CHECK(ivs.runs[i - 1].second + 1 < l);
                }
                CHECK(covered == sg.degree(v));
                CHECK(ivs.count() == oracle_runs(sg, tau, v));
            }
        }
    }
}

TEST_CASE("width_under fixtures") {
    CHECK(width_under(fig1(), CliqueOrdering::identity(4)) == 2);

    const auto [sp, pp] = gen_thin_spider(3);
    CHECK(width_under(sparse_representation(sp, pp), CliqueOrdering::identity(3)) == 1);

    const auto [sun, sunp] = gen_sun(4);
    CHECK(width_under(sparse_representation(sun, sunp), CliqueOrdering::identity(4)) == 2);

    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(width_under(sparse_representation(k3, split_partition(k3)),
                      CliqueOrdering::identity(3)) == 0);
}

TEST_CASE("width_under matches the per-vertex oracle and respects the half-clique bound") {
    Rng rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        const auto sg = random_split(rng, 8, 8);
        std::vector<int> seq(static_cast<size_t>(sg.clique_size()));
        std::iota(seq.begin(), seq.end(), 1);
        for (size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[rng.below(i)]);
        const auto tau = CliqueOrdering::from_sequence(seq);
        const int w = width_under(sg, tau);
        CHECK(w == oracle_width(sg, tau));
        // Any ordering of a clique of size c yields width at most ceil(c/2).
        CHECK(w <= (sg.clique_size() + 1) / 2);
    }
}

TEST_CASE("clique_interval_number_exact fixtures") {
    CHECK(clique_interval_number_exact(fig1()).first == 2);

    const auto [sun3, p3] = gen_sun(3);
    CHECK(clique_interval_number_exact(sparse_representation(sun3, p3)).first == 2);

    for (int n = 2; n <= 7; ++n) {
        const auto [sp, pp] = gen_thin_spider(n);
        const auto [k, tau] = clique_interval_number_exact(sparse_representation(sp, pp));
        CHECK(k == 1);
    }
}

TEST_CASE("clique_interval_number_exact: witness achieves the reported width") {
    Rng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const auto sg = random_split(rng, 7, 7);
        const auto [k, tau] = clique_interval_number_exact(sg);
        CHECK(width_under(sg, tau) == k);
        CHECK(k == oracle_ci_number(sg));
    }
}

TEST_CASE("clique_interval_number_exact rejects large cliques") {
    std::vector<std::vector<int>> lists{{1}};
    CHECK_THROWS_AS(
        clique_interval_number_exact(SparseSplitGraph::with_canonical_ids(11, std::move(lists))),
        TooLargeError);
}

TEST_CASE("exact number lower-bounds every ordering's width") {
    Rng rng(14);
    for (int trial = 0; trial < 150; ++trial) {
        const auto sg = random_split(rng, 7, 6);
        const int k = clique_interval_number_exact(sg).first;
        std::vector<int> seq(static_cast<size_t>(sg.clique_size()));
        std::iota(seq.begin(), seq.end(), 1);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            for (size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[rng.below(i)]);
            CHECK(k <= width_under(sg, CliqueOrdering::from_sequence(seq)));
        }
    }
}

TEST_CASE("threshold_ordering: nested chain fixture") {
    // K = {u1,u2,u3}, N(v1) = {u1}, N(v2) = {u1,u2}.
    const auto [g, p] = gen_threshold({1, 2}, 3);
    const auto sg = sparse_representation(g, p);
    const auto tau = threshold_ordering(sg);
    REQUIRE(tau.has_value());
    CHECK(tau->sequence() == std::vector<int>{1, 2, 3});
    CHECK(width_under(sg, *tau) == 1);
}

TEST_CASE("threshold_ordering rejects incomparable neighbourhoods") {
    const auto [sp, pp] = gen_thin_spider(3);
    CHECK(!threshold_ordering(sparse_representation(sp, pp)).has_value());
}

TEST_CASE("threshold_ordering: empty stable side yields the identity") {
    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto sg = sparse_representation(k3, split_partition(k3));
    const auto tau = threshold_ordering(sg);
    REQUIRE(tau.has_value());
    CHECK(tau->sequence() == std::vector<int>{1, 2, 3});
    CHECK(width_under(sg, *tau) == 0);
}

TEST_CASE("threshold acceptance matches a direct nestedness check, width always 1") {
    Rng rng(15);
    int accepted = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto sg = random_split(rng, 6, 5);
        // Direct definition: stable neighbourhoods totally ordered by
        // inclusion (as sets).
        bool nested = true;
        for (int a = 1; a <= sg.stable_count() && nested; ++a)
            for (int b = a + 1; b <= sg.stable_count() && nested; ++b) {
                const auto na = sg.neighbours(a), nb = sg.neighbours(b);
                const bool aInB = std::includes(nb.begin(), nb.end(), na.begin(), na.end());
                const bool bInA = std::includes(na.begin(), na.end(), nb.begin(), nb.end());
                nested = aInB || bInA;
            }
        const auto tau = threshold_ordering(sg);
        CHECK(tau.has_value() == nested);
        if (tau) {
            ++accepted;
            CHECK(width_under(sg, *tau) <= 1);
            // The clique side is then nested as well: the stable sets of the
            // clique vertices form suffixes of the chain.
            std::vector<std::vector<int>> members(static_cast<size_t>(sg.clique_size()) + 1);
            for (int v = 1; v <= sg.stable_count(); ++v)
                for (int idx : sg.neighbours(v)) members[idx].push_back(v);
            for (int a = 1; a <= sg.clique_size(); ++a)
                for (int b = a + 1; b <= sg.clique_size(); ++b) {
                    const bool aInB = std::includes(members[b].begin(), members[b].end(),
                                                    members[a].begin(), members[a].end());
                    const bool bInA = std::includes(members[a].begin(), members[a].end(),
                                                    members[b].begin(), members[b].end());
                    CHECK((aInB || bInA));
                }
        }
    }
    CHECK(accepted > 20);
}

TEST_CASE("comparability_ordering: prefix/suffix fixture") {
    // K = {u1,u2,u3}, N(x) = {u1}, N(y) = {u3}.
    const auto sg = SparseSplitGraph::with_canonical_ids(3, {{1}, {3}});
    const Graph g = expand(sg);
    SplitPartition p{{1, 2, 3}, {4, 5}};
    const auto cert = comparability_ordering(g, p);
    REQUIRE(cert.has_value());
    const auto seq = cert->tau.sequence();
    const bool fwd = seq == std::vector<int>{1, 2, 3};
    const bool rev = seq == std::vector<int>{3, 2, 1};
    CHECK((fwd || rev));
    // Each of x, y sees one clique vertex, as a pure prefix or suffix.
    CHECK(cert->prefixLen[1] + cert->suffixLen[1] == 1);
    CHECK(cert->prefixLen[2] + cert->suffixLen[2] == 1);
}

TEST_CASE("comparability_ordering rejects the 3-sun") {
    const auto [g, p] = gen_sun(3);
    CHECK(!comparability_ordering(g, p).has_value());
}

TEST_CASE("comparability_ordering accepts threshold graphs") {
    const auto [g, p] = gen_threshold({1, 2}, 3);
    const auto cert = comparability_ordering(g, p);
    REQUIRE(cert.has_value());
    CHECK(width_under(sparse_representation(g, p), cert->tau) <= 2);
}

TEST_CASE("comparability acceptance matches the exhaustive orientation oracle") {
    Rng rng(16);
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const auto sg = random_split(rng, 5, 4);
        const Graph g = expand(sg);
        if (g.edge_count() > 14) continue;
        SplitPartition p;
        for (int i = 1; i <= sg.clique_size(); ++i) p.clique.push_back(i);
        for (int v = 1; v <= sg.stable_count(); ++v) p.stable.push_back(sg.clique_size() + v);
        const auto cert = comparability_ordering(g, p);
        CHECK(cert.has_value() == has_transitive_orientation(g));
        (cert ? accepted : rejected)++;
        if (cert) CHECK(width_under(sg, cert->tau) <= 2);
    }
    CHECK(accepted > 30);
    CHECK(rejected > 10);
}

TEST_CASE("diameter_comparability fixtures") {
    // Distance-three pair: prefix {u1} against suffix {u3}.
    {
        const auto sg = SparseSplitGraph::with_canonical_ids(3, {{1}, {3}});
        SplitPartition p{{1, 2, 3}, {4, 5}};
        const auto cert = comparability_ordering(expand(sg), p);
        REQUIRE(cert.has_value());
        const auto res = diameter_comparability(sg, *cert);
        CHECK(res.value == 3);
        CHECK(res.value == oracle_diameter(sg));
        REQUIRE(res.witness.has_value());
        CHECK(oracle_stable_ecc(sg, *res.witness - sg.clique_size()) == 3);
    }
    // Nested pair: diameter two.
    {
        const auto sg = SparseSplitGraph::with_canonical_ids(2, {{1}});
        SplitPartition p{{1, 2}, {3}};
        const auto cert = comparability_ordering(expand(sg), p);
        REQUIRE(cert.has_value());
        CHECK(diameter_comparability(sg, *cert).value == 2);
    }
    {
        const auto [g, p] = gen_threshold({1, 2}, 3);
        const auto sg = sparse_representation(g, p);
        const auto cert = comparability_ordering(g, p);
        REQUIRE(cert.has_value());
        CHECK(diameter_comparability(sg, *cert).value == 2);
        CHECK(oracle_diameter(sg) == 2);
    }
}

TEST_CASE("diameter_comparability equals the naive diameter whenever an ordering exists") {
    Rng rng(17);
    int runs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto sg = random_split(rng, 6, 6);
        const Graph g = expand(sg);
        SplitPartition p;
        for (int i = 1; i <= sg.clique_size(); ++i) p.clique.push_back(i);
        for (int v = 1; v <= sg.stable_count(); ++v) p.stable.push_back(sg.clique_size() + v);
        const auto cert = comparability_ordering(g, p);
        if (!cert) continue;
        ++runs;
        const auto res = diameter_comparability(sg, *cert);
        CHECK(res.value == diameter_naive(sg).value);
        if (res.value == 3) {
            REQUIRE(res.witness.has_value());
            CHECK(oracle_stable_ecc(sg, *res.witness - sg.clique_size()) == 3);
        }
    }
    CHECK(runs > 60);
}

TEST_CASE("diameter_comparability validates the certificate") {
    const auto sg = fig1();
    ComparabilityCertificate bogus;
    bogus.tau = CliqueOrdering::identity(4);
    bogus.prefixLen = {0, 2, 3, 3, 2};
    bogus.suffixLen = {0, 0, 0, 0, 0};
    CHECK_THROWS_AS(diameter_comparability(sg, bogus), CertificateViolationError);
}
