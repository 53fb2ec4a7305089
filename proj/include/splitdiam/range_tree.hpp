#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

namespace splitdiam {

// Extreme representable coordinates double as -inf / +inf box bounds; all
// real coordinates produced by the diameter pipeline are far away from them.
inline constexpr std::int32_t kCoordNegInf = std::numeric_limits<std::int32_t>::min();
inline constexpr std::int32_t kCoordPosInf = std::numeric_limits<std::int32_t>::max();

// Static set of d-dimensional integer points. Duplicates are kept and count
// with multiplicity. `payload` carries an opaque id per point (the diameter
// algorithm stores stable-vertex records there); the tree ignores it.
class PointSet {
public:
    PointSet(int d, std::vector<std::int32_t> coords, std::vector<int> payload = {});

    int dim() const { return d_; }
    std::int64_t size() const { return static_cast<std::int64_t>(coords_.size()) / d_; }
    std::int32_t coord(std::int64_t p, int t) const { return coords_[p * d_ + t]; }
    const std::vector<std::int32_t>& coords() const { return coords_; }
    const std::vector<int>& payload() const { return payload_; }

private:
    int d_;
    std::vector<std::int32_t> coords_; // row-major
    std::vector<int> payload_;
};

// Axis-aligned box with closed integer bounds per dimension. Bounds with
// lo > hi are rejected at construction; callers convert half-open interval
// endpoints to closed ones by +-1 beforehand.
class Box {
public:
    explicit Box(std::vector<std::array<std::int32_t, 2>> bounds);
    static Box whole(int d); // unbounded in every dimension

    int dim() const { return static_cast<int>(bounds_.size()); }
    std::int32_t lo(int t) const { return bounds_[t][0]; }
    std::int32_t hi(int t) const { return bounds_[t][1]; }
    bool free_dim(int t) const {
        return bounds_[t][0] == kCoordNegInf && bounds_[t][1] == kCoordPosInf;
    }
    bool contains(const PointSet& ps, std::int64_t p) const;

    // Restricts dimension t to [lo, hi] intersected with the current bound;
    // returns false if that intersection is empty.
    bool clamp(int t, std::int32_t lo, std::int32_t hi);

private:
    std::vector<std::array<std::int32_t, 2>> bounds_;
};

// Layered counting range tree: a balanced hierarchy over the first
// coordinate whose canonical segments each hold a recursively built tree
// over the remaining coordinates; the final coordinate is a sorted array.
// Build is O(n polylog n) and count is O(polylog n) for fixed dimension;
// those bounds are exercised by the scaling benchmarks, not proven here.
class RangeTree {
public:
    // Throws DimensionError when ps.dim() < 1.
    static RangeTree build(const PointSet& ps);

    // Exact number of points inside b. Throws DimensionError on mismatch.
    std::int64_t count(const Box& b) const;

    int dim() const { return d_; }
    std::int64_t size() const { return n_; }

    RangeTree(RangeTree&&) noexcept;
    RangeTree& operator=(RangeTree&&) noexcept;
    ~RangeTree();

private:
    struct Layer;
    RangeTree();
    int d_ = 0;
    std::int64_t n_ = 0;
    std::unique_ptr<Layer> root_;
};

// Testing oracle: linear scan with the same contract as RangeTree::count.
std::int64_t count_bruteforce(const PointSet& ps, const Box& b);

} // namespace splitdiam
