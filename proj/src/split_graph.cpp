#include "splitdiam/split_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "splitdiam/errors.hpp"

namespace splitdiam {

SparseSplitGraph::SparseSplitGraph(int kSize, std::vector<std::vector<int>> lists,
                                   std::vector<int> cliqueIds, std::vector<int> stableIds) {
    if (kSize < 1) throw InvalidPartitionError("sparse split graph: empty clique");
    if (cliqueIds.size() != static_cast<size_t>(kSize) || stableIds.size() != lists.size())
        throw InvalidPartitionError("sparse split graph: label map size mismatch");

    kSize_ = kSize;
    const int s = static_cast<int>(lists.size());
    off_.assign(static_cast<size_t>(s) + 2, 0);
    std::int64_t total = 0;
    for (int v = 0; v < s; ++v) {
        const auto& l = lists[v];
        if (l.empty())
            throw InvalidPartitionError("sparse split graph: stable vertex with empty list");
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] < 1 || l[i] > kSize)
                throw InvalidPartitionError("sparse split graph: clique index out of range");
            if (i > 0 && l[i] <= l[i - 1])
                throw InvalidPartitionError("sparse split graph: list not strictly increasing");
        }
        if (static_cast<int>(l.size()) == kSize)
            throw InvalidPartitionError("sparse split graph: stable vertex dominates the clique");
        total += static_cast<std::int64_t>(l.size());
        off_[v + 2] = static_cast<int>(l.size());
    }
    // 1-based records.
    std::partial_sum(off_.begin(), off_.end(), off_.begin());
    neigh_.reserve(static_cast<size_t>(total));
    for (auto& l : lists) neigh_.insert(neigh_.end(), l.begin(), l.end());

    cliqueIds_.assign(static_cast<size_t>(kSize) + 1, 0);
    std::copy(cliqueIds.begin(), cliqueIds.end(), cliqueIds_.begin() + 1);
    stableIds_.assign(static_cast<size_t>(s) + 1, 0);
    std::copy(stableIds.begin(), stableIds.end(), stableIds_.begin() + 1);
}

SparseSplitGraph SparseSplitGraph::with_canonical_ids(int kSize,
                                                      std::vector<std::vector<int>> lists) {
    std::vector<int> kIds(kSize), sIds(lists.size());
    std::iota(kIds.begin(), kIds.end(), 1);
    std::iota(sIds.begin(), sIds.end(), kSize + 1);
    return SparseSplitGraph(kSize, std::move(lists), std::move(kIds), std::move(sIds));
}

ReverseIncidence build_reverse(const SparseSplitGraph& sg) {
    ReverseIncidence r;
    const int k = sg.clique_size();
    r.off.assign(static_cast<size_t>(k) + 2, 0);
    for (int v = 1; v <= sg.stable_count(); ++v)
        for (int idx : sg.neighbours(v)) ++r.off[idx + 1];
    std::partial_sum(r.off.begin(), r.off.end(), r.off.begin());
    r.rec.resize(static_cast<size_t>(sg.adjacency_size()));
    std::vector<int> cursor(r.off.begin(), r.off.end() - 1);
    for (int v = 1; v <= sg.stable_count(); ++v)
        for (int idx : sg.neighbours(v)) r.rec[cursor[idx]++] = v;
    return r;
}

SparseSplitGraph sparse_representation(const Graph& g, const SplitPartition& p) {
    if (!is_valid_split_partition(g, p))
        throw InvalidPartitionError("sparse_representation: invalid partition");

    const int n = g.vertex_count();
    std::vector<int> cliqueIndex(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < p.clique.size(); ++i) cliqueIndex[p.clique[i]] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> lists;
    lists.reserve(p.stable.size());
    for (int v : p.stable) {
        std::vector<int> l;
        l.reserve(g.neighbours(v).size());
        for (int w : g.neighbours(v)) l.push_back(cliqueIndex[w]);
        std::sort(l.begin(), l.end());
        lists.push_back(std::move(l));
    }
    return SparseSplitGraph(static_cast<int>(p.clique.size()), std::move(lists), p.clique,
                            p.stable);
}

namespace {

// Scratch for the per-source searches; stamping gives O(1) resets.
struct BfsScratch {
    std::vector<int> stableStamp;
    int stamp = 0;
};

// Eccentricity of stable record v (1-based): level 1 is N(v), level 2 is the
// rest of K plus every stable vertex sharing a neighbour with v, level 3 is
// whatever stable vertex is left. The maximal-clique invariant guarantees
// some clique vertex misses v, so the result is always 2 or 3.
int stable_eccentricity(const SparseSplitGraph& sg, const ReverseIncidence& rev, int v,
                        BfsScratch& sc) {
    const int s = sg.stable_count();
    ++sc.stamp;
    int visitedStable = 1;
    sc.stableStamp[v] = sc.stamp;
    for (int idx : sg.neighbours(v)) {
        for (int w : rev.records(idx)) {
            if (sc.stableStamp[w] != sc.stamp) {
                sc.stableStamp[w] = sc.stamp;
                ++visitedStable;
            }
        }
    }
    return visitedStable < s ? 3 : 2;
}

} // namespace

DiameterResult diameter_naive(const SparseSplitGraph& sg) {
    const int k = sg.clique_size();
    const int s = sg.stable_count();

    DiameterResult res;
    if (k + s == 1) {
        res.value = 0;
        return res;
    }

    if (s == 0) {
        res.value = 1; // complete graph on k >= 2 vertices
        return res;
    }

    const ReverseIncidence rev = build_reverse(sg);

    // Clique eccentricities never exceed 2 (K dominates the graph), and with
    // S nonempty the maximal-clique invariant forces diameter >= 2, so only
    // the stable eccentricities can raise the answer.
    int diam = 2;
    BfsScratch sc;
    sc.stableStamp.assign(static_cast<size_t>(s) + 1, 0);

    int witness = 0;
    for (int v = 1; v <= s; ++v) {
        const int ecc = stable_eccentricity(sg, rev, v, sc);
        if (ecc > diam) diam = ecc;
        if (ecc == 3) {
            const int label = sg.stable_label(v);
            if (witness == 0 || label < witness) witness = label;
        }
    }
    res.value = diam;
    if (diam == 3) res.witness = witness;
    return res;
}

std::optional<int> universal_vertex(const SparseSplitGraph& sg) {
    const int s = sg.stable_count();
    if (s == 0) return sg.clique_size() >= 1 ? std::optional<int>(1) : std::nullopt;
    std::vector<int> cover(static_cast<size_t>(sg.clique_size()) + 1, 0);
    for (int v = 1; v <= s; ++v)
        for (int idx : sg.neighbours(v)) ++cover[idx];
    for (int idx = 1; idx <= sg.clique_size(); ++idx)
        if (cover[idx] == s) return idx;
    return std::nullopt;
}

} // namespace splitdiam
