#include "splitdiam/event_boxes.hpp"

#include <stdexcept>

namespace splitdiam {

namespace {

// Gap g of the source intervals as closed coordinate bounds. Gap 0 is
// (-inf; l_1(v)), gap g >= 1 is (u_g(v); l_{g+1}(v)). Run maximality keeps
// every inner gap at least one position wide.
std::pair<std::int32_t, std::int32_t> gap_bounds(const IntervalSet& ivsV, int g) {
    if (g == 0) return {kCoordNegInf, ivsV.runs[0].first - 1};
    return {ivsV.runs[g - 1].second + 1, ivsV.runs[g].first - 1};
}

} // namespace

std::vector<EventBox> build_event_boxes(const IntervalSet& ivsV, int k, int kSize) {
    const int kv = ivsV.count();
    if (kv > k) throw std::invalid_argument("build_event_boxes: source exceeds interval bound");
    for (const auto& [l, u] : ivsV.runs)
        if (l < 1 || u > kSize || l > u)
            throw std::invalid_argument("build_event_boxes: run outside 1..kSize");

    std::vector<EventBox> out;
    for (int i = 1; i <= kv; ++i) {
        const int li = ivsV.runs[i - 1].first;
        const int ui = ivsV.runs[i - 1].second;
        const int uPrev = i >= 2 ? ivsV.runs[i - 2].second : 0;

        for (int j = 1; j <= k; ++j) {
            // Non-decreasing assignments of w's intervals 1..j-1 into the i
            // gaps 0..i-1 (combinations with repetition).
            std::vector<int> assign(static_cast<size_t>(j) - 1, 0);
            bool more = true;
            while (more) {
                for (int caseTag = 1; caseTag <= 3; ++caseTag) {
                    Box box = Box::whole(2 * k);
                    bool ok = true;
                    for (int jp = 1; jp < j && ok; ++jp) {
                        const auto [glo, ghi] = gap_bounds(ivsV, assign[jp - 1]);
                        ok = box.clamp(2 * (jp - 1), glo, ghi) && box.clamp(2 * jp - 1, glo, ghi);
                    }
                    if (!ok) continue;
                    const int dl = 2 * (j - 1), du = 2 * j - 1;
                    switch (caseTag) {
                    case 1:
                        ok = box.clamp(dl, uPrev + 1, li) && box.clamp(du, ui, kCoordPosInf);
                        break;
                    case 2:
                        ok = li <= ui - 1 && box.clamp(dl, uPrev + 1, li) &&
                             box.clamp(du, li, ui - 1);
                        break;
                    case 3:
                        ok = li + 1 <= ui && box.clamp(dl, li + 1, ui);
                        break;
                    }
                    if (!ok) continue;
                    out.push_back(EventBox{i, j, caseTag, assign, std::move(box)});
                }
                // Advance to the next non-decreasing assignment.
                more = false;
                for (int pos = j - 2; pos >= 0; --pos) {
                    if (assign[pos] < i - 1) {
                        const int v = assign[pos] + 1;
                        for (int q = pos; q < j - 1; ++q) assign[q] = v;
                        more = true;
                        break;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<std::int32_t> event_point(const IntervalSet& ivs, int k, int kSize) {
    std::vector<std::int32_t> p;
    p.reserve(static_cast<size_t>(2) * k);
    for (int t = 1; t <= k; ++t) {
        if (t <= ivs.count()) {
            p.push_back(ivs.runs[t - 1].first);
            p.push_back(ivs.runs[t - 1].second);
        } else {
            p.push_back(kSize + 2 * t);
            p.push_back(kSize + 2 * t);
        }
    }
    return p;
}

} // namespace splitdiam
