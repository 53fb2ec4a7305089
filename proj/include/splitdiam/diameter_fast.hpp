#pragma once

#include <optional>
#include <utility>

#include "splitdiam/event_boxes.hpp"
#include "splitdiam/ordering.hpp"
#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// A vertex of a sparse split graph: either a clique index or a stable record.
struct VertexRef {
    enum class Kind { Clique, Stable };
    Kind kind = Kind::Clique;
    int idx = 0;
    static VertexRef clique(int idx) { return {Kind::Clique, idx}; }
    static VertexRef stable(int idx) { return {Kind::Stable, idx}; }
};

// Diameter of a clique-interval split graph: at most two iff a universal
// vertex exists. The caller is responsible for the clique-interval property
// (the recognition module provides certificates); on other inputs the value
// returned by this function is meaningless.
DiameterResult diameter_clique_interval(const SparseSplitGraph& sg);

// If u is a maximum neighbour of v (every closed neighbourhood of N[v] lies
// inside N[u]), the diameter is 2 exactly when u is universal. Returns
// nullopt when the maximum-neighbour check fails; the check is the whole
// cost of the call.
std::optional<DiameterResult> max_neighbour_shortcut(const SparseSplitGraph& sg, VertexRef v,
                                                     VertexRef u);

// Smallest degree-one stable vertex paired with its unique clique neighbour
// (automatically a maximum neighbour), or nullopt when the minimum degree is
// at least two. Returned as (stable record, clique index).
std::optional<std::pair<int, int>> find_pendant_shortcut(const SparseSplitGraph& sg);

// Range-tree diameter: decomposes every stable neighbourhood into intervals
// under tau, builds one 2k-range tree over the padded endpoint points
// (k = width of tau, measured), and counts per source the vertices within
// distance two as a sum over the disjoint event boxes. The source's own
// point lands in exactly one event, so eccentricity <= 2 holds iff the total
// equals |S|. All sources are processed (no early exit), and the witness is
// the smallest deficient stable label; `threads` may parallelize over
// sources without changing the result. Throws OrderingMismatchError.
DiameterResult diameter_kci_rangetree(const SparseSplitGraph& sg, const CliqueOrdering& tau,
                                      int threads = 1);

// Complement-side diameter: sigma orders the stable records; for each clique
// index the runs of its stable neighbours under sigma are collected, and a
// stable vertex has eccentricity <= 2 iff the runs of its neighbours cover
// all of S. O(k m) for a width-(k+1) run structure. Throws
// OrderingMismatchError.
DiameterResult diameter_complement_kci(const SparseSplitGraph& sg, const CliqueOrdering& sigma);

} // namespace splitdiam
