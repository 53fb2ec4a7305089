#pragma once

#include <optional>
#include <vector>

#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// Finite set system (X, R): ground set 1..groundSize plus a family of
// subsets. Duplicate sets are removed and members kept sorted.
struct SetSystem {
    int groundSize = 0;
    std::vector<std::vector<int>> sets;

    SetSystem() = default;
    SetSystem(int groundSize, std::vector<std::vector<int>> sets);
};

// Neighbourhood system of the stable set: ground set = clique indices,
// family = stable neighbourhoods.
SetSystem neighbourhood_system(const SparseSplitGraph& sg);

// Exact VC-dimension: the largest |Y| such that { Y cap r : r in R } is the
// whole power set of Y. Empty family has VC-dimension 0 by convention.
// Exhaustive over candidate subsets; throws TooLargeError when
// groundSize > 20.
int vc_dimension(const SetSystem& ss);

// Exact stabbing number: minimum over ground orderings (reversal-reduced) of
// the maximum number of consecutive pairs any set splits. Throws
// TooLargeError when groundSize > 10.
int stabbing_number(const SetSystem& ss);

// Dual system (R, X*): ground set indexes the (deduplicated) sets of ss, and
// each ground element x of ss contributes { r : x in r }.
SetSystem dual_system(const SetSystem& ss);

// An induced n-sun: clique vertices arranged in a cycle plus stable vertices
// matching consecutive cycle pairs. Indices are clique indices resp. stable
// records of the searched graph.
struct SunEmbedding {
    std::vector<int> cliqueCycle;
    std::vector<int> stableVertices;
};

// Searches for an induced n-sun with 3 <= n <= maxN; returns the first one
// in canonical enumeration order (n ascending, clique subsets and
// arrangements lexicographic) or nullopt. Throws TooLargeError when
// kSize > 12 or maxN > 6.
std::optional<SunEmbedding> find_induced_sun(const SparseSplitGraph& sg, int maxN);

} // namespace splitdiam
