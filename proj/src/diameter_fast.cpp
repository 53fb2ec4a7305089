#include "splitdiam/diameter_fast.hpp"

#include <algorithm>
#include <thread>

#include "splitdiam/errors.hpp"

namespace splitdiam {

DiameterResult diameter_clique_interval(const SparseSplitGraph& sg) {
    const int s = sg.stable_count();
    DiameterResult res;
    if (sg.vertex_count() == 1) return res; // value 0
    if (s == 0) {
        res.value = 1;
        return res;
    }
    std::vector<int> cover(static_cast<size_t>(sg.clique_size()) + 1, 0);
    for (int v = 1; v <= s; ++v)
        for (int idx : sg.neighbours(v)) ++cover[idx];
    int best = 1;
    for (int idx = 2; idx <= sg.clique_size(); ++idx)
        if (cover[idx] > cover[best]) best = idx;
    if (cover[best] == s) {
        res.value = 2;
        return res;
    }
    // No universal vertex. Under a clique-interval ordering every stable
    // vertex missing the best-covered clique vertex must also miss some
    // whole neighbourhood, so it is a valid eccentricity-3 witness.
    res.value = 3;
    int witness = 0;
    for (int v = 1; v <= s; ++v) {
        const auto nb = sg.neighbours(v);
        if (!std::binary_search(nb.begin(), nb.end(), best)) {
            const int label = sg.stable_label(v);
            if (witness == 0 || label < witness) witness = label;
        }
    }
    res.witness = witness;
    return res;
}

std::optional<DiameterResult> max_neighbour_shortcut(const SparseSplitGraph& sg, VertexRef v,
                                                     VertexRef u) {
    const int k = sg.clique_size();
    const int s = sg.stable_count();
    const ReverseIncidence rev = build_reverse(sg);

    // Membership marks for N[u] over clique indices and stable records.
    std::vector<char> uClique(static_cast<size_t>(k) + 1, 0);
    std::vector<char> uStable(static_cast<size_t>(s) + 1, 0);
    if (u.kind == VertexRef::Kind::Clique) {
        for (int idx = 1; idx <= k; ++idx) uClique[idx] = 1;
        for (int w : rev.records(u.idx)) uStable[w] = 1;
    } else {
        uStable[u.idx] = 1;
        for (int idx : sg.neighbours(u.idx)) uClique[idx] = 1;
    }

    bool uUniversal = true;
    for (int idx = 1; idx <= k && uUniversal; ++idx) uUniversal = uClique[idx];
    for (int w = 1; w <= s && uUniversal; ++w) uUniversal = uStable[w];

    // N[v] as (clique part, stable part).
    std::vector<int> vClique, vStable;
    if (v.kind == VertexRef::Kind::Clique) {
        for (int idx = 1; idx <= k; ++idx) vClique.push_back(idx);
        for (int w : rev.records(v.idx)) vStable.push_back(w);
    } else {
        vStable.push_back(v.idx);
        for (int idx : sg.neighbours(v.idx)) vClique.push_back(idx);
    }

    // Union of closed neighbourhoods over N[v] must lie inside N[u].
    for (int idx : vClique) {
        if (!uClique[idx]) return std::nullopt;
        for (int q = 1; q <= k; ++q)
            if (!uClique[q]) return std::nullopt; // idx is adjacent to all of K
        for (int w : rev.records(idx))
            if (!uStable[w]) return std::nullopt;
    }
    for (int w : vStable) {
        if (!uStable[w]) return std::nullopt;
        for (int idx : sg.neighbours(w))
            if (!uClique[idx]) return std::nullopt;
    }

    DiameterResult res;
    if (sg.vertex_count() == 1) return res;
    if (s == 0) {
        res.value = 1;
        return res;
    }
    if (uUniversal) {
        res.value = 2;
        return res;
    }
    // Every vertex outside N[u] is at distance >= 3 from v; such a vertex is
    // stable because N[u] contains the whole clique here.
    res.value = 3;
    int witness = 0;
    for (int w = 1; w <= s; ++w)
        if (!uStable[w]) {
            const int label = sg.stable_label(w);
            if (witness == 0 || label < witness) witness = label;
        }
    res.witness = witness;
    return res;
}

std::optional<std::pair<int, int>> find_pendant_shortcut(const SparseSplitGraph& sg) {
    // Smallest stable label with a single clique neighbour.
    int bestV = 0, bestU = 0, bestLabel = 0;
    for (int v = 1; v <= sg.stable_count(); ++v) {
        if (sg.degree(v) == 1) {
            const int label = sg.stable_label(v);
            if (bestV == 0 || label < bestLabel) {
                bestV = v;
                bestU = sg.neighbours(v)[0];
                bestLabel = label;
            }
        }
    }
    if (bestV == 0) return std::nullopt;
    return std::make_pair(bestV, bestU);
}

namespace {

// Interval decompositions of all stable neighbourhoods under tau, by a single
// sweep over positions (see ordering.cpp's decompose_all; duplicated here to
// keep the hot path self-contained and allocation-light).
std::vector<IntervalSet> decompose_for_tree(const SparseSplitGraph& sg,
                                            const CliqueOrdering& tau) {
    const int s = sg.stable_count();
    const ReverseIncidence rev = build_reverse(sg);
    const std::vector<int> seq = tau.sequence();
    std::vector<IntervalSet> ivs(static_cast<size_t>(s) + 1);
    std::vector<int> lastPos(static_cast<size_t>(s) + 1, -2);
    for (int p = 1; p <= sg.clique_size(); ++p) {
        for (int w : rev.records(seq[p - 1])) {
            if (lastPos[w] == p - 1)
                ivs[w].runs.back().second = p;
            else
                ivs[w].runs.emplace_back(p, p);
            lastPos[w] = p;
        }
    }
    return ivs;
}

} // namespace

DiameterResult diameter_kci_rangetree(const SparseSplitGraph& sg, const CliqueOrdering& tau,
                                      int threads) {
    const int s = sg.stable_count();
    if (tau.side != CliqueOrdering::Side::OverK || tau.size() != sg.clique_size() ||
        !tau.is_permutation())
        throw OrderingMismatchError("diameter_kci_rangetree: ordering does not match the clique");

    DiameterResult res;
    if (sg.vertex_count() == 1) return res;
    if (s == 0) {
        res.value = 1;
        return res;
    }
    res.value = 2;
    if (s == 1) return res;

    const std::vector<IntervalSet> ivs = decompose_for_tree(sg, tau);
    int k = 1;
    for (int v = 1; v <= s; ++v) k = std::max(k, ivs[v].count());
    const int kSize = sg.clique_size();

    std::vector<std::int32_t> coords;
    coords.reserve(static_cast<size_t>(s) * 2 * k);
    for (int v = 1; v <= s; ++v) {
        const auto pt = event_point(ivs[v], k, kSize);
        coords.insert(coords.end(), pt.begin(), pt.end());
    }
    const PointSet points(2 * k, std::move(coords));
    const RangeTree tree = RangeTree::build(points);

    // Independent per-source counting over the shared tree. Every source is
    // processed; the conjunction and the smallest-label witness do not depend
    // on the partition into threads.
    const int nThreads = std::max(1, std::min(threads, s));
    std::vector<int> localWitness(static_cast<size_t>(nThreads), 0);
    auto work = [&](int tid) {
        int witness = 0;
        for (int v = 1 + tid; v <= s; v += nThreads) {
            std::int64_t total = 0;
            for (const EventBox& eb : build_event_boxes(ivs[v], k, kSize))
                total += tree.count(eb.box);
            if (total != s) {
                const int label = sg.stable_label(v);
                if (witness == 0 || label < witness) witness = label;
            }
        }
        localWitness[tid] = witness;
    };
    if (nThreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nThreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    int witness = 0;
    for (int w : localWitness)
        if (w != 0 && (witness == 0 || w < witness)) witness = w;
    if (witness != 0) {
        res.value = 3;
        res.witness = witness;
    }
    return res;
}

DiameterResult diameter_complement_kci(const SparseSplitGraph& sg, const CliqueOrdering& sigma) {
    const int s = sg.stable_count();
    const int k = sg.clique_size();
    if (sigma.side != CliqueOrdering::Side::OverS || sigma.size() != s ||
        !sigma.is_permutation())
        throw OrderingMismatchError(
            "diameter_complement_kci: ordering does not match the stable set");

    DiameterResult res;
    if (sg.vertex_count() == 1) return res;
    if (s == 0) {
        res.value = 1;
        return res;
    }
    res.value = 2;
    if (s == 1) return res;

    // Runs of N(u) over stable positions, one sweep in position order.
    const std::vector<int> seq = sigma.sequence();
    std::vector<std::vector<std::pair<int, int>>> runs(static_cast<size_t>(k) + 1);
    std::vector<int> lastPos(static_cast<size_t>(k) + 1, -2);
    for (int p = 1; p <= s; ++p) {
        for (int idx : sg.neighbours(seq[p - 1])) {
            if (lastPos[idx] == p - 1)
                runs[idx].back().second = p;
            else
                runs[idx].emplace_back(p, p);
            lastPos[idx] = p;
        }
    }

    // Eccentricity of w <= 2 iff the runs of its neighbours cover [1, s].
    int witness = 0;
    std::vector<std::pair<int, int>> pool;
    for (int w = 1; w <= s; ++w) {
        pool.clear();
        for (int idx : sg.neighbours(w))
            pool.insert(pool.end(), runs[idx].begin(), runs[idx].end());
        std::sort(pool.begin(), pool.end());
        int covered = 0; // positions 1..covered are covered
        for (const auto& [lo, hi] : pool) {
            if (lo > covered + 1) break;
            covered = std::max(covered, hi);
        }
        if (covered < s) {
            const int label = sg.stable_label(w);
            if (witness == 0 || label < witness) witness = label;
        }
    }
    if (witness != 0) {
        res.value = 3;
        res.witness = witness;
    }
    return res;
}

} // namespace splitdiam
