#include "splitdiam/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "splitdiam/errors.hpp"

namespace splitdiam {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        "-" + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    off_.assign(static_cast<size_t>(n) + 2, 0);
    for (auto [u, v] : edges_) {
        ++off_[u + 1];
        ++off_[v + 1];
    }
    std::partial_sum(off_.begin(), off_.end(), off_.begin());
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(off_.begin(), off_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (int v = 1; v <= n_; ++v)
        std::sort(adj_.begin() + off_[v], adj_.begin() + off_[v + 1]);
}

bool Graph::adjacent(int u, int v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbours(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

SplitPartition split_partition(const Graph& g) {
    if (!g.connected()) throw DisconnectedError("split_partition: graph is disconnected");

    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) h = i;

    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 0; i < h; ++i) lhs += g.degree(order[i]);
    for (int i = h; i < n; ++i) rhs += g.degree(order[i]);
    if (lhs != rhs) throw NotSplitError("split_partition: graph is not a split graph");

    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + h);
    p.stable.assign(order.begin() + h, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.stable.begin(), p.stable.end());

    if (!is_valid_split_partition(g, p))
        throw std::logic_error("split_partition: degree-sequence partition failed validation");
    return p;
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
    const int n = g.vertex_count();
    std::vector<char> inClique(static_cast<size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : p.clique) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = inClique[v] = 1;
    }
    for (int v : p.stable) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    if (static_cast<int>(p.clique.size() + p.stable.size()) != n) return false;

    for (int v : p.clique)
        for (int w : p.clique)
            if (v < w && !g.adjacent(v, w)) return false;
    for (int v : p.stable)
        for (int w : g.neighbours(v))
            if (!inClique[w]) return false;
    // Maximality: no stable vertex adjacent to the whole clique.
    for (int v : p.stable) {
        int hits = 0;
        for (int w : g.neighbours(v)) hits += inClique[w];
        if (hits == static_cast<int>(p.clique.size()) && hits > 0) return false;
    }
    return true;
}

} // namespace splitdiam
