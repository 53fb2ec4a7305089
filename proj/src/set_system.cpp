#include "splitdiam/set_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "splitdiam/errors.hpp"
#include "splitdiam/ordering.hpp"

namespace splitdiam {

SetSystem::SetSystem(int groundSize, std::vector<std::vector<int>> sets_)
    : groundSize(groundSize), sets(std::move(sets_)) {
    if (groundSize < 0) throw std::invalid_argument("set system: negative ground size");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int x : s)
            if (x < 1 || x > groundSize)
                throw std::invalid_argument("set system: member outside the ground set");
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

SetSystem neighbourhood_system(const SparseSplitGraph& sg) {
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<size_t>(sg.stable_count()));
    for (int v = 1; v <= sg.stable_count(); ++v) {
        const auto nb = sg.neighbours(v);
        sets.emplace_back(nb.begin(), nb.end());
    }
    return SetSystem(sg.clique_size(), std::move(sets));
}

namespace {

std::vector<std::uint32_t> set_masks(const SetSystem& ss) {
    std::vector<std::uint32_t> masks;
    masks.reserve(ss.sets.size());
    for (const auto& s : ss.sets) {
        std::uint32_t m = 0;
        for (int x : s) m |= 1u << (x - 1);
        masks.push_back(m);
    }
    return masks;
}

// All 2^|Y| intersection patterns present?
bool shattered(const std::vector<std::uint32_t>& masks, const std::vector<int>& bits) {
    const int d = static_cast<int>(bits.size());
    const std::uint32_t want = 1u << d;
    std::vector<char> seen(want, 0);
    std::uint32_t found = 0;
    for (std::uint32_t m : masks) {
        std::uint32_t pat = 0;
        for (int t = 0; t < d; ++t) pat |= ((m >> bits[t]) & 1u) << t;
        if (!seen[pat]) {
            seen[pat] = 1;
            if (++found == want) return true;
        }
    }
    return false;
}

// Lexicographic size-d subsets of {0..n-1}.
template <typename Fn>
bool any_combination(int n, int d, Fn&& fn) {
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    if (d > n) return false;
    while (true) {
        if (fn(idx)) return true;
        int p = d - 1;
        while (p >= 0 && idx[p] == n - d + p) --p;
        if (p < 0) return false;
        ++idx[p];
        for (int q = p + 1; q < d; ++q) idx[q] = idx[q - 1] + 1;
    }
}

} // namespace

int vc_dimension(const SetSystem& ss) {
    if (ss.groundSize > 20) throw TooLargeError("vc_dimension: ground set larger than 20");
    const auto masks = set_masks(ss);
    if (masks.empty()) return 0; // convention for the empty family

    // Shattering |Y| = d needs 2^d distinct traces, hence 2^d <= |R|.
    int dmax = 0;
    while ((1u << (dmax + 1)) <= masks.size() && dmax + 1 <= ss.groundSize) ++dmax;
    int best = 0;
    for (int d = 1; d <= dmax; ++d) {
        const bool found = any_combination(
            ss.groundSize, d, [&](const std::vector<int>& bits) { return shattered(masks, bits); });
        if (!found) break;
        best = d;
    }
    return best;
}

int stabbing_number(const SetSystem& ss) {
    const int n = ss.groundSize;
    if (n > 10) throw TooLargeError("stabbing_number: ground set larger than 10");
    const auto masks = set_masks(ss);
    if (masks.empty() || n <= 1) return 0;

    const std::uint32_t pairMask = (1u << (n - 1)) - 1;
    int best = n; // a set can stab at most n-1 pairs
    detail::for_each_canonical_permutation(n, [&](const std::vector<int>& seq) {
        int worst = 0;
        for (std::uint32_t m : masks) {
            std::uint32_t pm = 0;
            for (int p = 0; p < n; ++p) pm |= ((m >> (seq[p] - 1)) & 1u) << p;
            const int stabs = std::popcount((pm ^ (pm >> 1)) & pairMask);
            if (stabs > worst) worst = stabs;
            if (worst >= best) break;
        }
        best = std::min(best, worst);
        return best > 0;
    });
    return best;
}

SetSystem dual_system(const SetSystem& ss) {
    const int r = static_cast<int>(ss.sets.size());
    std::vector<std::vector<int>> dualSets(static_cast<size_t>(ss.groundSize));
    for (int i = 0; i < r; ++i)
        for (int x : ss.sets[i]) dualSets[x - 1].push_back(i + 1);
    return SetSystem(r, std::move(dualSets));
}

std::optional<SunEmbedding> find_induced_sun(const SparseSplitGraph& sg, int maxN) {
    const int k = sg.clique_size();
    if (k > 12) throw TooLargeError("find_induced_sun: clique larger than 12");
    if (maxN > 6) throw TooLargeError("find_induced_sun: suns larger than 6 not searched");

    const int s = sg.stable_count();
    std::vector<int> posInU(static_cast<size_t>(k) + 1, -1);

    for (int n = 3; n <= std::min(maxN, k); ++n) {
        std::optional<SunEmbedding> hit;
        any_combination(k, n, [&](const std::vector<int>& pick) {
            std::vector<int> U(pick.size());
            for (size_t t = 0; t < pick.size(); ++t) U[t] = pick[t] + 1;
            for (int t = 0; t < n; ++t) posInU[U[t]] = t;

            // Stable vertices whose trace on U is exactly one pair; keep the
            // smallest record per pair.
            std::vector<int> pairOwner(static_cast<size_t>(n) * n, 0);
            for (int v = 1; v <= s; ++v) {
                int a = -1, b = -1, cnt = 0;
                for (int idx : sg.neighbours(v)) {
                    const int t = posInU[idx];
                    if (t >= 0) {
                        ++cnt;
                        if (cnt == 1)
                            a = t;
                        else if (cnt == 2)
                            b = t;
                        else
                            break;
                    }
                }
                if (cnt == 2) {
                    int& owner = pairOwner[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
                    if (owner == 0) owner = v;
                }
            }
            for (int t = 0; t < n; ++t) posInU[U[t]] = -1;

            // Cyclic arrangements anchored at U[0], reflections halved.
            std::vector<int> rest(static_cast<size_t>(n) - 1);
            std::iota(rest.begin(), rest.end(), 1);
            do {
                if (rest.front() > rest.back()) continue;
                bool ok = true;
                std::vector<int> stables(static_cast<size_t>(n));
                for (int t = 0; t < n && ok; ++t) {
                    const int a = t == 0 ? 0 : rest[t - 1];
                    const int b = t == n - 1 ? 0 : rest[t];
                    const int v = pairOwner[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
                    if (v == 0)
                        ok = false;
                    else
                        stables[t] = v;
                }
                if (ok) {
                    SunEmbedding emb;
                    emb.cliqueCycle.push_back(U[0]);
                    for (int t : rest) emb.cliqueCycle.push_back(U[t]);
                    emb.stableVertices = std::move(stables);
                    hit = std::move(emb);
                    return true;
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
            return false;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace splitdiam
