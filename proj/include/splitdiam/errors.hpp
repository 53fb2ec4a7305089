#pragma once

#include <stdexcept>
#include <string>

namespace splitdiam {

// Input graph is not connected.
struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph has no split partition (contains an induced 2K2, C4 or C5).
struct NotSplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A clique/stable bipartition does not satisfy its invariants against the graph.
struct InvalidPartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive search was requested above its size cap.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Zero-dimensional point set, or box/tree dimension mismatch.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An ordering is not a permutation of the expected index range.
struct OrderingMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (A, B) is not a partition of the stable set.
struct BadPartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator parameters are out of the feasible range.
struct InfeasibleParametersError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A supplied ordering certificate does not have the promised shape.
struct CertificateViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph or ordering file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace splitdiam
