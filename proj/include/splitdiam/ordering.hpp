#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// Total ordering of the clique indices (side == OverK) or of the stable
// records (side == OverS; used only by the complement algorithm).
// pos[x] is the 1-based position of index x.
struct CliqueOrdering {
    enum class Side { OverK, OverS };
    Side side = Side::OverK;
    std::vector<int> pos; // 1-based; pos[0] unused

    int size() const { return static_cast<int>(pos.size()) - 1; }

    // Sequence form: seq[p-1] is the index placed at position p.
    std::vector<int> sequence() const;
    static CliqueOrdering from_sequence(const std::vector<int>& seq,
                                        Side side = Side::OverK);
    static CliqueOrdering identity(int n, Side side = Side::OverK);
    bool is_permutation() const;
};

// Maximal runs of a neighbourhood under an ordering, as closed position
// intervals l_1 <= u_1 < l_2 <= u_2 < ... (gaps of at least one position).
struct IntervalSet {
    std::vector<std::pair<int, int>> runs;
    int count() const { return static_cast<int>(runs.size()); }
};

// Runs of N(v) under tau, in position order. tau.side must be OverK.
IntervalSet decompose_intervals(const SparseSplitGraph& sg, const CliqueOrdering& tau, int v);

// Max run count over all stable vertices; 0 when S is empty. O(m + kSize).
int width_under(const SparseSplitGraph& sg, const CliqueOrdering& tau);

// Exact clique-interval number by exhaustive search over the kSize!
// permutations, halved by reversal symmetry (run counts are invariant under
// reversing an ordering; no other symmetry applies). Returns the minimum
// width and the lexicographically first witness ordering.
// Throws TooLargeError when kSize > 10.
std::pair<int, CliqueOrdering> clique_interval_number_exact(const SparseSplitGraph& sg);

// Threshold construction: if the stable neighbourhoods are totally ordered by
// inclusion (which on a split graph forces the clique side to be nested as
// well), returns the ordering that lays out N(v_1), N(v_2)\N(v_1), ...,
// K\N(v_p) as consecutive blocks, each block sorted by index. The result
// always has width <= 1. Returns nullopt when the graph is not threshold.
std::optional<CliqueOrdering> threshold_ordering(const SparseSplitGraph& sg);

// Ordering of K induced by a linear extension of a transitive orientation,
// together with the per-stable-vertex certificate: under `tau`, N(v) is the
// union of a prefix (prefixLen[v] positions) and a suffix (suffixLen[v]
// positions) of the order.
struct ComparabilityCertificate {
    CliqueOrdering tau;
    std::vector<int> prefixLen; // 1-based by stable record
    std::vector<int> suffixLen;
};

// Computes a transitive orientation of g by implication-class forcing
// (O(n*m)), takes a linear extension, restricts it to K. Returns nullopt when
// g admits no transitive orientation. The prefix/suffix certificate of the
// result is verified before returning.
std::optional<ComparabilityCertificate> comparability_ordering(const Graph& g,
                                                               const SplitPartition& p);

// Diameter from a prefix/suffix certificate: only a pair with one
// neighbourhood equal to a prefix and the other equal to a suffix can be at
// distance 3, and among those it suffices to test the shortest prefix against
// the shortest suffix. Throws CertificateViolationError if the certificate
// does not match sg.
DiameterResult diameter_comparability(const SparseSplitGraph& sg,
                                      const ComparabilityCertificate& cert);

namespace detail {
// Calls fn(perm) for every permutation of {1..n} with perm.front() <
// perm.back() (one representative per reversal pair); for n == 1 the single
// permutation. fn returns false to stop early.
template <typename Fn>
void for_each_canonical_permutation(int n, Fn&& fn) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        if (n > 1 && perm.front() > perm.back()) continue;
        if (!fn(const_cast<const std::vector<int>&>(perm))) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
}
} // namespace detail

} // namespace splitdiam
