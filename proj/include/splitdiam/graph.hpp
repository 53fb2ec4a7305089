#pragma once

#include <span>
#include <utility>
#include <vector>

namespace splitdiam {

// Simple undirected graph on vertices 1..n with an edge list and sorted
// adjacency. Rejects self-loops, duplicate edges and out-of-range ids at
// construction.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbours(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }
    int degree(int v) const { return off_[v + 1] - off_[v]; }
    bool adjacent(int u, int v) const;
    bool connected() const;

    // Edges normalized to (min, max), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<int> off_;
    std::vector<int> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Bipartition of the vertices of a split graph into a maximal clique K and a
// stable set S, both sorted by vertex id.
struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> stable;
};

// Computes a split partition of a connected graph via the degree-sequence
// characterization: with degrees d_1 >= ... >= d_n and h = max{i : d_i >= i-1},
// the graph is split iff sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i, in which
// case the h highest-degree vertices form a maximal clique. Ties between equal
// degrees are broken by smallest vertex id, which fixes the result uniquely.
//
// Throws DisconnectedError or NotSplitError.
SplitPartition split_partition(const Graph& g);

// Checks partition validity against g: disjoint cover, clique side complete,
// stable side edgeless, clique maximal. Used by sparse_representation.
bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

} // namespace splitdiam
