#pragma once

#include <optional>

#include "splitdiam/ordering.hpp"
#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// Outcome of clique-interval recognition. When accepted, `ordering` is a
// clique ordering under which every stable neighbourhood is one run
// (verified before returning).
struct RecognitionResult {
    bool accepted = false;
    std::optional<CliqueOrdering> ordering;
};

// Decides whether some ordering of K turns every stable neighbourhood into a
// single run — the consecutive-ones property of the stable/clique incidence —
// via PQ-tree reduction of the neighbourhood lists. Near-linear in the size
// of the sparse representation.
RecognitionResult recognize_clique_interval(const SparseSplitGraph& sg);

// True iff tau is a width-<=1 ordering for sg. Linear time.
bool verify_ordering_certificate(const SparseSplitGraph& sg, const CliqueOrdering& tau);

// Oracle recognition by exhaustive permutation search (kSize <= 10);
// agrees with recognize_clique_interval. Throws TooLargeError.
RecognitionResult recognize_bruteforce(const SparseSplitGraph& sg);

} // namespace splitdiam
