#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here recomputes results from first principles (queue BFS over explicit
// adjacency, exhaustive enumeration) so the library's own shortcuts are
// never on both sides of an assertion.

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "splitdiam/generators.hpp"
#include "splitdiam/graph.hpp"
#include "splitdiam/rng.hpp"
#include "splitdiam/split_graph.hpp"

namespace testsupport {

using namespace splitdiam;

// Explicit graph with canonical labels (clique indices 1..k, then stable
// records k+1..k+s) from a sparse split graph.
inline Graph expand(const SparseSplitGraph& sg) {
    std::vector<std::pair<int, int>> edges;
    const int k = sg.clique_size();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) edges.emplace_back(a, b);
    for (int v = 1; v <= sg.stable_count(); ++v)
        for (int idx : sg.neighbours(v)) edges.emplace_back(idx, k + v);
    return Graph(sg.vertex_count(), std::move(edges));
}

// Single-source distances by plain queue BFS; -1 for unreachable.
inline std::vector<int> bfs_dists(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline int bfs_eccentricity(const Graph& g, int src) {
    int ecc = 0;
    for (int d : bfs_dists(g, src)) ecc = std::max(ecc, d);
    return ecc;
}

inline int bfs_diameter(const Graph& g) {
    int diam = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) diam = std::max(diam, bfs_eccentricity(g, v));
    return diam;
}

inline int oracle_diameter(const SparseSplitGraph& sg) { return bfs_diameter(expand(sg)); }

// Eccentricity of a stable record in the expanded graph.
inline int oracle_stable_ecc(const SparseSplitGraph& sg, int record) {
    const Graph g = expand(sg);
    return bfs_eccentricity(g, sg.clique_size() + record);
}

// Random split graph in sparse form: kSize in [2, kMax], up to sMax stable
// vertices with arbitrary nonempty proper neighbourhoods.
inline SparseSplitGraph random_split(Rng& rng, int kMax, int sMax) {
    const int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(kMax - 1)));
    const int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(sMax) + 1));
    std::vector<std::vector<int>> lists(static_cast<size_t>(s));
    for (auto& row : lists) {
        // Random mask, nonempty and not full.
        std::uint32_t mask = 0;
        while (mask == 0 || mask == (1u << k) - 1)
            mask = static_cast<std::uint32_t>(rng.below(1u << k));
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) row.push_back(i + 1);
    }
    return SparseSplitGraph::with_canonical_ids(k, std::move(lists));
}

// Random connected graph on n vertices: a random spanning tree plus each
// remaining pair with probability numerator/denominator.
inline Graph random_connected_graph(Rng& rng, int n, int numerator = 1, int denominator = 3) {
    std::vector<std::pair<int, int>> edges;
    std::vector<char> adj(static_cast<size_t>(n + 1) * (n + 1), 0);
    auto addEdge = [&](int u, int v) {
        if (u == v || adj[static_cast<size_t>(u) * (n + 1) + v]) return;
        adj[static_cast<size_t>(u) * (n + 1) + v] = 1;
        adj[static_cast<size_t>(v) * (n + 1) + u] = 1;
        edges.emplace_back(u, v);
    };
    for (int v = 2; v <= n; ++v) addEdge(1 + static_cast<int>(rng.below(v - 1)), v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (static_cast<int>(rng.below(denominator)) < numerator) addEdge(u, v);
    return Graph(n, std::move(edges));
}

// All valid split partitions of g by exhausting clique-side subsets.
inline std::vector<SplitPartition> enumerate_split_partitions(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<SplitPartition> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SplitPartition p;
        for (int v = 1; v <= n; ++v)
            ((mask >> (v - 1)) & 1u ? p.clique : p.stable).push_back(v);
        if (is_valid_split_partition(g, p)) out.push_back(std::move(p));
    }
    return out;
}

// Exhaustive transitive-orientation test by backtracking over the edges.
inline bool has_transitive_orientation(const Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return true;
    std::vector<int> orient(static_cast<size_t>(m), 0); // +1 min->max, -1 reverse

    auto edgeId = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        return it != edges.end() && *it == std::make_pair(u, v)
                   ? static_cast<int>(it - edges.begin())
                   : -1;
    };
    auto oriented = [&](int u, int v) { // is u -> v currently set?
        const int e = edgeId(u, v);
        if (e < 0) return false;
        return orient[e] == (u < v ? +1 : -1);
    };
    // Violation introduced by orienting a->b: some a->b->c without a->c, or
    // c->a->b without c->b.
    auto violates = [&](int a, int b) {
        for (int c : g.neighbours(b))
            if (c != a && oriented(b, c) && !oriented(a, c)) return true;
        for (int c : g.neighbours(a))
            if (c != b && oriented(c, a) && !oriented(c, b)) return true;
        return false;
    };
    auto rec = [&](auto&& self, int e) -> bool {
        if (e == m) return true;
        const auto [u, v] = edges[e];
        for (int dir : {+1, -1}) {
            orient[e] = dir;
            const int a = dir > 0 ? u : v, b = dir > 0 ? v : u;
            if (!violates(a, b) && self(self, e + 1)) return true;
        }
        orient[e] = 0;
        return false;
    };
    return rec(rec, 0);
}

} // namespace testsupport
