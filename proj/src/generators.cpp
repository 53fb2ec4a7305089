#include "splitdiam/generators.hpp"

#include <algorithm>
#include <numeric>

#include "splitdiam/errors.hpp"
#include "splitdiam/rng.hpp"

namespace splitdiam {

namespace {

std::pair<Graph, SplitPartition> assemble(int kSize, const std::vector<std::vector<int>>& lists) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= kSize; ++a)
        for (int b = a + 1; b <= kSize; ++b) edges.emplace_back(a, b);
    for (size_t i = 0; i < lists.size(); ++i)
        for (int u : lists[i]) edges.emplace_back(u, kSize + static_cast<int>(i) + 1);
    Graph g(kSize + static_cast<int>(lists.size()), std::move(edges));
    SplitPartition p;
    p.clique.resize(kSize);
    std::iota(p.clique.begin(), p.clique.end(), 1);
    p.stable.resize(lists.size());
    std::iota(p.stable.begin(), p.stable.end(), kSize + 1);
    return {std::move(g), std::move(p)};
}

} // namespace

std::pair<Graph, SplitPartition> gen_sun(int n) {
    if (n < 3) throw InfeasibleParametersError("gen_sun: n must be at least 3");
    std::vector<std::vector<int>> lists(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        lists[i] = {i + 1, (i + 1) % n + 1};
        std::sort(lists[i].begin(), lists[i].end());
    }
    return assemble(n, lists);
}

std::pair<Graph, SplitPartition> gen_thin_spider(int n) {
    if (n < 2) throw InfeasibleParametersError("gen_thin_spider: n must be at least 2");
    std::vector<std::vector<int>> lists(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) lists[i] = {i + 1};
    return assemble(n, lists);
}

std::pair<Graph, SplitPartition> gen_threshold(const std::vector<int>& degreeChain, int kSize) {
    for (size_t i = 0; i < degreeChain.size(); ++i) {
        if (degreeChain[i] < 1)
            throw InfeasibleParametersError("gen_threshold: degrees must be positive");
        if (i > 0 && degreeChain[i] < degreeChain[i - 1])
            throw InfeasibleParametersError("gen_threshold: chain must be non-decreasing");
        if (degreeChain[i] >= kSize)
            throw InfeasibleParametersError(
                "gen_threshold: degree must stay below kSize to keep the clique maximal");
    }
    std::vector<std::vector<int>> lists;
    lists.reserve(degreeChain.size());
    for (int d : degreeChain) {
        std::vector<int> l(static_cast<size_t>(d));
        std::iota(l.begin(), l.end(), 1);
        lists.push_back(std::move(l));
    }
    return assemble(kSize, lists);
}

std::pair<Graph, SplitPartition> gen_fig1() {
    return assemble(4, {{1, 2}, {1, 2, 3}, {2, 3, 4}, {2, 4}});
}

namespace {

// Uniform composition of `total` into `parts` non-negative summands via a
// uniform size-(parts-1) cut subset of {1..total+parts-1} (stars and bars),
// sampled with Floyd's algorithm so the draw count is fixed.
std::vector<int> random_composition(Rng& rng, int total, int parts) {
    if (parts == 1) return {total};
    const int universe = total + parts - 1;
    const int cuts = parts - 1;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(cuts));
    for (int j = universe - cuts + 1; j <= universe; ++j) {
        const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(j)));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
            chosen.push_back(t);
        else
            chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> out(static_cast<size_t>(parts));
    int prev = 0;
    for (int i = 0; i < cuts; ++i) {
        out[i] = chosen[i] - prev - 1;
        prev = chosen[i];
    }
    out[cuts] = universe - prev;
    return out;
}

} // namespace

std::pair<SparseSplitGraph, CliqueOrdering> gen_random_kci(int kSize, int sSize, int k,
                                                           std::uint64_t seed) {
    if (kSize < 1 || sSize < 0 || k < 1 || k > (kSize + 1) / 2)
        throw InfeasibleParametersError("gen_random_kci: need 1 <= k <= ceil(kSize/2)");
    if (sSize >= 1 && kSize < 2)
        throw InfeasibleParametersError("gen_random_kci: stable vertices need kSize >= 2");

    Rng rng(seed);
    std::vector<std::vector<int>> lists;
    lists.reserve(static_cast<size_t>(sSize));
    for (int v = 0; v < sSize; ++v) {
        const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        // Run lengths: uniform in 1..Lcap. The cap keeps r runs plus their
        // separating gaps inside the clique and bounds the expected degree
        // at roughly kSize/12 so the instances stay sparse representations.
        int lcap = std::min((kSize - (r - 1)) / r, std::max(2, kSize / 12));
        if (r == 1) lcap = std::min(lcap, kSize - 1);
        lcap = std::max(lcap, 1);
        std::vector<int> len(static_cast<size_t>(r));
        int used = r - 1; // mandatory one-position inner gaps
        for (int i = 0; i < r; ++i) {
            len[i] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(lcap)));
            used += len[i];
        }
        const std::vector<int> extra = random_composition(rng, kSize - used, r + 1);
        std::vector<int> row;
        row.reserve(static_cast<size_t>(used - (r - 1)));
        int pos = 1 + extra[0];
        for (int i = 0; i < r; ++i) {
            for (int q = 0; q < len[i]; ++q) row.push_back(pos + q);
            pos += len[i] + 1 + extra[i + 1];
        }
        lists.push_back(std::move(row));
    }
    return {SparseSplitGraph::with_canonical_ids(kSize, std::move(lists)),
            CliqueOrdering::identity(kSize)};
}

std::pair<SparseSplitGraph, CliqueOrdering> gen_random_complement_kci(int kSize, int sSize,
                                                                      int k,
                                                                      std::uint64_t seed) {
    if (kSize < 2 || sSize < 1 || k < 1)
        throw InfeasibleParametersError("gen_random_complement_kci: parameters out of range");

    Rng rng(seed);
    // Plant r = k+1 runs per clique vertex over stable positions, run length
    // chosen so the total adjacency is roughly sSize/4 per clique vertex
    // independently of k.
    const int r = std::min(k + 1, (sSize + 1) / 2);
    const int lcap = std::max(1, sSize / (4 * r));
    std::vector<std::vector<int>> rows(static_cast<size_t>(sSize));
    for (int u = 1; u <= kSize; ++u) {
        std::vector<int> len(static_cast<size_t>(r));
        int used = r - 1;
        for (int i = 0; i < r; ++i) {
            len[i] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(lcap)));
            used += len[i];
        }
        const std::vector<int> extra = random_composition(rng, sSize - used, r + 1);
        int pos = 1 + extra[0];
        for (int i = 0; i < r; ++i) {
            for (int q = 0; q < len[i]; ++q) rows[static_cast<size_t>(pos + q) - 1].push_back(u);
            pos += len[i] + 1 + extra[i + 1];
        }
    }
    // Connectivity and maximality repairs: attach uncovered stable vertices
    // to a deterministic clique vertex, trim full rows by one.
    for (int w = 0; w < sSize; ++w) {
        if (rows[w].empty()) rows[w].push_back(1 + w % kSize);
        if (static_cast<int>(rows[w].size()) == kSize) rows[w].pop_back();
    }
    return {SparseSplitGraph::with_canonical_ids(kSize, std::move(rows)),
            CliqueOrdering::identity(sSize, CliqueOrdering::Side::OverS)};
}

SparseSplitGraph reduce_diam2(const Graph& g) {
    if (!g.connected()) throw DisconnectedError("reduce_diam2: graph is disconnected");
    const int n = g.vertex_count();

    int universal = 0;
    for (int v = 1; v <= n && universal == 0; ++v)
        if (g.degree(v) == n - 1) universal = v;

    if (universal == 0) {
        // Clique = the n copies (labels n+1..2n, copy of v at index v);
        // stable vertex u is adjacent to the copies of N[u].
        std::vector<std::vector<int>> lists(static_cast<size_t>(n));
        std::vector<int> stableIds(static_cast<size_t>(n));
        std::vector<int> cliqueIds(static_cast<size_t>(n));
        for (int u = 1; u <= n; ++u) {
            auto& row = lists[u - 1];
            const auto nb = g.neighbours(u);
            row.reserve(nb.size() + 1);
            for (int w : nb) row.push_back(w);
            row.push_back(u);
            std::sort(row.begin(), row.end());
            stableIds[u - 1] = u;
            cliqueIds[u - 1] = n + u;
        }
        return SparseSplitGraph(n, std::move(lists), std::move(cliqueIds),
                                std::move(stableIds));
    }

    // A universal source vertex would dominate the copy clique, so the
    // smallest one joins the clique side (its copies-row covers all of V');
    // everything else is unchanged.
    std::vector<std::vector<int>> lists;
    std::vector<int> stableIds;
    std::vector<int> cliqueIds(static_cast<size_t>(n) + 1);
    cliqueIds[0] = universal;
    for (int v = 1; v <= n; ++v) cliqueIds[v] = n + v; // copy of v at index v+1
    for (int u = 1; u <= n; ++u) {
        if (u == universal) continue;
        std::vector<int> row;
        row.reserve(g.neighbours(u).size() + 1);
        for (int w : g.neighbours(u)) row.push_back(w + 1);
        row.push_back(u + 1);
        std::sort(row.begin(), row.end());
        lists.push_back(std::move(row));
        stableIds.push_back(u);
    }
    return SparseSplitGraph(n + 1, std::move(lists), std::move(cliqueIds),
                            std::move(stableIds));
}

SparseSplitGraph gadget_min_degree_two(const SparseSplitGraph& sg, const std::vector<int>& A,
                                       const std::vector<int>& B) {
    const int s = sg.stable_count();
    std::vector<char> side(static_cast<size_t>(s) + 1, 0);
    for (int v : A) {
        if (v < 1 || v > s || side[v]) throw BadPartitionError("gadget: bad A");
        side[v] = 1;
    }
    for (int v : B) {
        if (v < 1 || v > s || side[v]) throw BadPartitionError("gadget: bad B");
        side[v] = 2;
    }
    for (int v = 1; v <= s; ++v)
        if (!side[v]) throw BadPartitionError("gadget: A and B must cover the stable set");

    const int k = sg.clique_size();
    int maxLabel = 0;
    for (int i = 1; i <= k; ++i) maxLabel = std::max(maxLabel, sg.clique_label(i));
    for (int v = 1; v <= s; ++v) maxLabel = std::max(maxLabel, sg.stable_label(v));
    const int aLabel = maxLabel + 1, bLabel = maxLabel + 2, v0Label = maxLabel + 3;
    const int aIdx = k + 1, bIdx = k + 2;

    std::vector<std::vector<int>> lists;
    std::vector<int> stableIds;
    lists.reserve(static_cast<size_t>(s) + 1);
    for (int v = 1; v <= s; ++v) {
        const auto nb = sg.neighbours(v);
        std::vector<int> row(nb.begin(), nb.end());
        row.push_back(side[v] == 1 ? aIdx : bIdx);
        lists.push_back(std::move(row));
        stableIds.push_back(sg.stable_label(v));
    }
    lists.push_back({aIdx, bIdx});
    stableIds.push_back(v0Label);

    std::vector<int> cliqueIds;
    cliqueIds.reserve(static_cast<size_t>(k) + 2);
    for (int i = 1; i <= k; ++i) cliqueIds.push_back(sg.clique_label(i));
    cliqueIds.push_back(aLabel);
    cliqueIds.push_back(bLabel);
    return SparseSplitGraph(k + 2, std::move(lists), std::move(cliqueIds),
                            std::move(stableIds));
}

} // namespace splitdiam
