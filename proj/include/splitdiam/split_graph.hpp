#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitdiam/graph.hpp"

namespace splitdiam {

// Split graph stored by its sparse representation: the clique K is implicit
// (indices 1..kSize), and each stable vertex carries its sorted list of
// clique-neighbour indices.
//
// Invariants enforced at construction: every list is non-empty (connectivity),
// strictly increasing, within 1..kSize, and never equal to all of 1..kSize
// (K is a maximal clique).
class SparseSplitGraph {
public:
    // lists[i] is the neighbour list of the i-th stable vertex (0-based i).
    // cliqueIds/stableIds map clique index resp. stable record back to the
    // vertex labels of the originating graph.
    SparseSplitGraph(int kSize, std::vector<std::vector<int>> lists,
                     std::vector<int> cliqueIds, std::vector<int> stableIds);

    // Canonical labels: clique 1..kSize, stable kSize+1..kSize+#lists.
    static SparseSplitGraph with_canonical_ids(int kSize, std::vector<std::vector<int>> lists);

    int clique_size() const { return kSize_; }
    int stable_count() const { return static_cast<int>(stableIds_.size()) - 1; }
    int vertex_count() const { return kSize_ + stable_count(); }
    // Total length of the stable adjacency lists.
    std::int64_t adjacency_size() const { return static_cast<std::int64_t>(neigh_.size()); }

    // v in 1..stable_count(); returns sorted clique indices.
    std::span<const int> neighbours(int v) const {
        return {neigh_.data() + off_[v], neigh_.data() + off_[v + 1]};
    }
    int degree(int v) const { return off_[v + 1] - off_[v]; }

    int clique_label(int idx) const { return cliqueIds_[idx]; }
    int stable_label(int v) const { return stableIds_[v]; }

private:
    SparseSplitGraph() = default;
    int kSize_ = 0;
    std::vector<int> off_;   // 1-based records; off_[v]..off_[v+1]
    std::vector<int> neigh_;
    std::vector<int> cliqueIds_; // 1-based by clique index
    std::vector<int> stableIds_; // 1-based by record
};

// Clique-index -> stable-record incidence, i.e. the transpose of the stable
// adjacency lists. Records per clique index are sorted ascending.
struct ReverseIncidence {
    std::vector<int> off;  // 1-based clique indices
    std::vector<int> rec;
    std::span<const int> records(int idx) const {
        return {rec.data() + off[idx], rec.data() + off[idx + 1]};
    }
    int count(int idx) const { return off[idx + 1] - off[idx]; }
};

ReverseIncidence build_reverse(const SparseSplitGraph& sg);

// Builds the sparse representation of g under partition p. Clique indices are
// assigned 1..|K| following p's sorted order; stable records follow p's
// sorted order. Throws InvalidPartitionError.
SparseSplitGraph sparse_representation(const Graph& g, const SplitPartition& p);

// Diameter of a split graph: always in {0,1,2,3}. When the value is 3,
// witness holds the label of the smallest stable vertex of eccentricity 3.
struct DiameterResult {
    int value = 0;
    std::optional<int> witness;
};

// Ground-truth diameter: breadth-first search from every vertex over the
// sparse structure (clique edges handled implicitly). Theta(n * (n + m));
// this is the quadratic baseline the fast algorithms are compared against.
DiameterResult diameter_naive(const SparseSplitGraph& sg);

// Smallest clique index adjacent to every stable vertex, if any. A universal
// vertex of a split graph with S nonempty must lie in K.
std::optional<int> universal_vertex(const SparseSplitGraph& sg);

} // namespace splitdiam
