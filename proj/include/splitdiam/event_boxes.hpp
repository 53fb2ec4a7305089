#pragma once

#include <vector>

#include "splitdiam/ordering.hpp"
#include "splitdiam/range_tree.hpp"

namespace splitdiam {

// One disjoint event of the distance-two count for a fixed source v: the
// box over points p(w) = (l_1(w), u_1(w), ..., l_k(w), u_k(w)) capturing
// "w's interval j is the first to meet N(v), it first meets v's interval i
// via shape `caseTag`, and w's earlier intervals sit in the gaps of v's
// intervals as prescribed by gapAssign".
//
// caseTag 1: l_j(w) in (u_{i-1}(v); l_i(v)] and u_j(w) >= u_i(v)
// caseTag 2: l_j(w) in (u_{i-1}(v); l_i(v)] and u_j(w) in [l_i(v); u_i(v))
// caseTag 3: l_j(w) in (l_i(v); u_i(v)]
// gapAssign[j'-1] = g places w's interval j' inside gap g of v, where gap 0
// is everything left of l_1(v) and gap g>=1 lies between v's intervals g and
// g+1. Assignments are non-decreasing in j'.
struct EventBox {
    int i = 0;
    int j = 0;
    int caseTag = 0;
    std::vector<int> gapAssign;
    Box box;
};

// Full event family for a source with interval set ivsV, given the global
// interval bound k and clique size kSize. For each pair (i, j) at most
// 3 * 2^i * 2^(max(j-2,0)) boxes are produced; for a fixed source they are
// pairwise disjoint as point predicates, and their union over all (i, j)
// holds exactly the points of the vertices w with N(w) and N(v) intersecting.
// Interval endpoints use the conventions u_0(v) = 0 and closed integer
// bounds (half-open paper bounds shifted by one).
std::vector<EventBox> build_event_boxes(const IntervalSet& ivsV, int k, int kSize);

// Point of one vertex: its interval endpoints in slot order, padded to k
// intervals with one-cell sentinel intervals [kSize+2t, kSize+2t] for the
// unused slots t. Sentinels keep the coordinates strictly increasing and can
// never satisfy a first-contact bound, since all real bounds are <= kSize.
std::vector<std::int32_t> event_point(const IntervalSet& ivs, int k, int kSize);

} // namespace splitdiam
