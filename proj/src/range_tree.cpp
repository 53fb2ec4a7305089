#include "splitdiam/range_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitdiam/errors.hpp"

namespace splitdiam {

PointSet::PointSet(int d, std::vector<std::int32_t> coords, std::vector<int> payload)
    : d_(d), coords_(std::move(coords)), payload_(std::move(payload)) {
    if (d < 1) throw DimensionError("point set dimension must be at least 1");
    if (coords_.size() % static_cast<size_t>(d) != 0)
        throw DimensionError("coordinate array is not a multiple of the dimension");
    if (!payload_.empty() && payload_.size() != coords_.size() / static_cast<size_t>(d))
        throw DimensionError("payload size does not match point count");
}

Box::Box(std::vector<std::array<std::int32_t, 2>> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw DimensionError("box dimension must be at least 1");
    for (const auto& [lo, hi] : bounds_)
        if (lo > hi) throw std::invalid_argument("empty box bound");
}

Box Box::whole(int d) {
    return Box(std::vector<std::array<std::int32_t, 2>>(
        static_cast<size_t>(d), {kCoordNegInf, kCoordPosInf}));
}

bool Box::contains(const PointSet& ps, std::int64_t p) const {
    for (int t = 0; t < dim(); ++t) {
        const std::int32_t c = ps.coord(p, t);
        if (c < bounds_[t][0] || c > bounds_[t][1]) return false;
    }
    return true;
}

bool Box::clamp(int t, std::int32_t lo, std::int32_t hi) {
    bounds_[t][0] = std::max(bounds_[t][0], lo);
    bounds_[t][1] = std::min(bounds_[t][1], hi);
    return bounds_[t][0] <= bounds_[t][1];
}

namespace {
constexpr int kLeafCut = 24; // segments at most this size are scanned directly
}

// Structure over one subset of points for dimensions t..d-1: the subset
// sorted by dimension t, plus (below the last dimension) a balanced segment
// hierarchy whose inner segments carry a Layer for the remaining dimensions
// and whose leaf segments keep their points' trailing coordinates for a
// direct scan.
struct RangeTree::Layer {
    int t = 0;
    int d = 0;
    std::vector<std::int32_t> keys; // dim-t values, sorted

    struct Seg {
        std::int64_t lo = 0, hi = 0; // position range [lo, hi) in keys
        std::unique_ptr<Seg> left, right;
        std::unique_ptr<Layer> next;       // dims t+1.. over the same range
        std::vector<std::int32_t> tailPts; // leaf: (d-t-1) coords per point
    };
    std::unique_ptr<Seg> segRoot;

    static std::unique_ptr<Layer> build(const PointSet& ps, std::vector<std::int64_t> rows,
                                        int t);
    std::int64_t count(const Box& b) const;

private:
    std::unique_ptr<Seg> build_seg(const PointSet& ps, const std::vector<std::int64_t>& rows,
                                   std::int64_t lo, std::int64_t hi);
    std::int64_t count_seg(const Seg& s, std::int64_t a, std::int64_t b, const Box& box) const;
};

std::unique_ptr<RangeTree::Layer> RangeTree::Layer::build(const PointSet& ps,
                                                          std::vector<std::int64_t> rows,
                                                          int t) {
    auto layer = std::make_unique<Layer>();
    layer->t = t;
    layer->d = ps.dim();
    std::sort(rows.begin(), rows.end(), [&](std::int64_t a, std::int64_t b) {
        return ps.coord(a, t) < ps.coord(b, t);
    });
    layer->keys.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) layer->keys[i] = ps.coord(rows[i], t);
    if (t + 1 < ps.dim() && !rows.empty())
        layer->segRoot = layer->build_seg(ps, rows, 0, static_cast<std::int64_t>(rows.size()));
    return layer;
}

std::unique_ptr<RangeTree::Layer::Seg> RangeTree::Layer::build_seg(
    const PointSet& ps, const std::vector<std::int64_t>& rows, std::int64_t lo,
    std::int64_t hi) {
    auto seg = std::make_unique<Seg>();
    seg->lo = lo;
    seg->hi = hi;
    if (hi - lo <= kLeafCut) {
        const int tail = d - t - 1;
        seg->tailPts.reserve(static_cast<size_t>((hi - lo) * tail));
        for (std::int64_t p = lo; p < hi; ++p)
            for (int q = t + 1; q < d; ++q) seg->tailPts.push_back(ps.coord(rows[p], q));
        return seg;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    seg->left = build_seg(ps, rows, lo, mid);
    seg->right = build_seg(ps, rows, mid, hi);
    seg->next = Layer::build(
        ps, std::vector<std::int64_t>(rows.begin() + lo, rows.begin() + hi), t + 1);
    return seg;
}

std::int64_t RangeTree::Layer::count(const Box& box) const {
    const auto lo = box.lo(t), hi = box.hi(t);
    const std::int64_t a = std::lower_bound(keys.begin(), keys.end(), lo) - keys.begin();
    const std::int64_t b = std::upper_bound(keys.begin(), keys.end(), hi) - keys.begin();
    if (a >= b) return 0;
    bool tailFree = true;
    for (int q = t + 1; q < d && tailFree; ++q) tailFree = box.free_dim(q);
    if (t + 1 == d || tailFree) return b - a;
    return count_seg(*segRoot, a, b, box);
}

std::int64_t RangeTree::Layer::count_seg(const Seg& s, std::int64_t a, std::int64_t b,
                                         const Box& box) const {
    if (b <= s.lo || s.hi <= a) return 0;
    if (a <= s.lo && s.hi <= b && s.next) return s.next->count(box);
    if (!s.left) {
        // Leaf: qualifying positions are contiguous; test trailing dims.
        const int tail = d - t - 1;
        std::int64_t cnt = 0;
        const std::int64_t from = std::max(a, s.lo), to = std::min(b, s.hi);
        for (std::int64_t p = from; p < to; ++p) {
            const std::int32_t* c = s.tailPts.data() + (p - s.lo) * tail;
            bool ok = true;
            for (int q = 0; q < tail && ok; ++q)
                ok = c[q] >= box.lo(t + 1 + q) && c[q] <= box.hi(t + 1 + q);
            cnt += ok;
        }
        return cnt;
    }
    return count_seg(*s.left, a, b, box) + count_seg(*s.right, a, b, box);
}

RangeTree::RangeTree() = default;
RangeTree::RangeTree(RangeTree&&) noexcept = default;
RangeTree& RangeTree::operator=(RangeTree&&) noexcept = default;
RangeTree::~RangeTree() = default;

RangeTree RangeTree::build(const PointSet& ps) {
    if (ps.dim() < 1) throw DimensionError("range tree needs dimension at least 1");
    RangeTree tree;
    tree.d_ = ps.dim();
    tree.n_ = ps.size();
    std::vector<std::int64_t> rows(static_cast<size_t>(ps.size()));
    std::iota(rows.begin(), rows.end(), 0);
    tree.root_ = Layer::build(ps, std::move(rows), 0);
    return tree;
}

std::int64_t RangeTree::count(const Box& b) const {
    if (b.dim() != d_) throw DimensionError("box dimension does not match the tree");
    if (n_ == 0) return 0;
    return root_->count(b);
}

std::int64_t count_bruteforce(const PointSet& ps, const Box& b) {
    if (b.dim() != ps.dim()) throw DimensionError("box dimension does not match the point set");
    std::int64_t cnt = 0;
    for (std::int64_t p = 0; p < ps.size(); ++p) cnt += b.contains(ps, p);
    return cnt;
}

} // namespace splitdiam
