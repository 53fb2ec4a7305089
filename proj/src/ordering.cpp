#include "splitdiam/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "splitdiam/errors.hpp"

namespace splitdiam {

std::vector<int> CliqueOrdering::sequence() const {
    std::vector<int> seq(size());
    for (int x = 1; x <= size(); ++x) seq[pos[x] - 1] = x;
    return seq;
}

CliqueOrdering CliqueOrdering::from_sequence(const std::vector<int>& seq, Side side) {
    CliqueOrdering tau;
    tau.side = side;
    tau.pos.assign(seq.size() + 1, 0);
    for (size_t p = 0; p < seq.size(); ++p) {
        const int x = seq[p];
        if (x < 1 || x > static_cast<int>(seq.size()) || tau.pos[x] != 0)
            throw OrderingMismatchError("ordering is not a permutation");
        tau.pos[x] = static_cast<int>(p) + 1;
    }
    return tau;
}

CliqueOrdering CliqueOrdering::identity(int n, Side side) {
    CliqueOrdering tau;
    tau.side = side;
    tau.pos.resize(static_cast<size_t>(n) + 1);
    std::iota(tau.pos.begin(), tau.pos.end(), 0);
    return tau;
}

bool CliqueOrdering::is_permutation() const {
    std::vector<char> seen(pos.size(), 0);
    for (int x = 1; x <= size(); ++x) {
        const int p = pos[x];
        if (p < 1 || p > size() || seen[p]) return false;
        seen[p] = 1;
    }
    return true;
}

IntervalSet decompose_intervals(const SparseSplitGraph& sg, const CliqueOrdering& tau, int v) {
    IntervalSet out;
    std::vector<int> ps;
    ps.reserve(sg.neighbours(v).size());
    for (int idx : sg.neighbours(v)) ps.push_back(tau.pos[idx]);
    std::sort(ps.begin(), ps.end());
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i == 0 || ps[i] != ps[i - 1] + 1)
            out.runs.emplace_back(ps[i], ps[i]);
        else
            out.runs.back().second = ps[i];
    }
    return out;
}

namespace {

// Runs of every stable neighbourhood under tau in one sweep over positions:
// visiting clique indices in position order keeps each vertex's positions
// arriving sorted, so runs extend by comparing against the last position seen.
// O(m + kSize), no per-vertex sort.
std::vector<IntervalSet> decompose_all(const SparseSplitGraph& sg, const CliqueOrdering& tau) {
    const int s = sg.stable_count();
    const ReverseIncidence rev = build_reverse(sg);
    const std::vector<int> seq = tau.sequence();
    std::vector<IntervalSet> ivs(static_cast<size_t>(s) + 1);
    std::vector<int> lastPos(static_cast<size_t>(s) + 1, -2);
    for (int p = 1; p <= sg.clique_size(); ++p) {
        for (int w : rev.records(seq[p - 1])) {
            if (lastPos[w] == p - 1)
                ivs[w].runs.back().second = p;
            else
                ivs[w].runs.emplace_back(p, p);
            lastPos[w] = p;
        }
    }
    return ivs;
}

} // namespace

int width_under(const SparseSplitGraph& sg, const CliqueOrdering& tau) {
    if (tau.side != CliqueOrdering::Side::OverK || tau.size() != sg.clique_size() ||
        !tau.is_permutation())
        throw OrderingMismatchError("width_under: ordering does not match the clique");
    int best = 0;
    for (const auto& iv : decompose_all(sg, tau)) best = std::max(best, iv.count());
    return best;
}

std::pair<int, CliqueOrdering> clique_interval_number_exact(const SparseSplitGraph& sg) {
    const int k = sg.clique_size();
    if (k > 10) throw TooLargeError("clique_interval_number_exact: clique larger than 10");

    // Deduplicated neighbourhood bitmasks; width of an ordering is the max
    // number of bit runs after remapping masks through the permutation.
    std::vector<std::uint32_t> masks;
    for (int v = 1; v <= sg.stable_count(); ++v) {
        std::uint32_t m = 0;
        for (int idx : sg.neighbours(v)) m |= 1u << (idx - 1);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    if (masks.empty()) return {0, CliqueOrdering::identity(k)};

    int best = k + 1;
    std::vector<int> bestSeq;
    detail::for_each_canonical_permutation(k, [&](const std::vector<int>& seq) {
        int worst = 0;
        for (std::uint32_t m : masks) {
            std::uint32_t pm = 0;
            for (int p = 0; p < k; ++p) pm |= ((m >> (seq[p] - 1)) & 1u) << p;
            const int runs = std::popcount(pm & ~(pm << 1));
            if (runs > worst) worst = runs;
            if (worst >= best) break;
        }
        if (worst < best) {
            best = worst;
            bestSeq = seq;
        }
        return best > 1; // width 1 cannot be improved
    });
    return {best, CliqueOrdering::from_sequence(bestSeq)};
}

std::optional<CliqueOrdering> threshold_ordering(const SparseSplitGraph& sg) {
    const int k = sg.clique_size();
    const int s = sg.stable_count();
    if (s == 0) return CliqueOrdering::identity(k);

    std::vector<int> chain(s);
    std::iota(chain.begin(), chain.end(), 1);
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
        if (sg.degree(a) != sg.degree(b)) return sg.degree(a) < sg.degree(b);
        return a < b;
    });
    for (int i = 0; i + 1 < s; ++i) {
        const auto a = sg.neighbours(chain[i]);
        const auto b = sg.neighbours(chain[i + 1]);
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return std::nullopt;
    }

    // rank[idx] = first chain member containing idx; sorting by (rank, idx)
    // lays the difference blocks out consecutively, untouched indices last.
    std::vector<int> rank(static_cast<size_t>(k) + 1, s + 1);
    for (int i = s - 1; i >= 0; --i)
        for (int idx : sg.neighbours(chain[i])) rank[idx] = i;
    std::vector<int> seq(k);
    std::iota(seq.begin(), seq.end(), 1);
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        return a < b;
    });
    CliqueOrdering tau = CliqueOrdering::from_sequence(seq);
    if (width_under(sg, tau) > 1)
        throw std::logic_error("threshold_ordering: constructed ordering is not width-1");
    return tau;
}

namespace {

struct OrientationState {
    // orient[e]: 0 unknown, +1 edge oriented (min -> max), -1 reversed.
    std::vector<int> orient;
    const std::vector<std::pair<int, int>>* edges;

    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges->begin(), edges->end(), std::make_pair(u, v));
        return static_cast<int>(it - edges->begin());
    }
};

} // namespace

std::optional<ComparabilityCertificate> comparability_ordering(const Graph& g,
                                                               const SplitPartition& p) {
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    OrientationState st;
    st.orient.assign(m, 0);
    st.edges = &edges;

    // Returns false on a forcing contradiction.
    auto closure = [&](int seed) -> bool {
        std::vector<std::pair<int, int>> queue; // directed (a, b)
        const auto [su, sv] = edges[seed];
        st.orient[seed] = +1;
        queue.emplace_back(su, sv);
        size_t head = 0;
        auto force = [&](int a, int b) -> bool {
            // require orientation a -> b
            const int e = st.edge_id(a, b);
            const int want = a < b ? +1 : -1;
            if (st.orient[e] == want) return true;
            if (st.orient[e] == -want) return false;
            st.orient[e] = want;
            queue.emplace_back(a, b);
            return true;
        };
        while (head < queue.size()) {
            const auto [a, b] = queue[head++];
            for (int c : g.neighbours(a))
                if (c != b && !g.adjacent(c, b) && !force(a, c)) return false;
            for (int c : g.neighbours(b))
                if (c != a && !g.adjacent(c, a) && !force(c, b)) return false;
        }
        return true;
    };

    for (int e = 0; e < m; ++e)
        if (st.orient[e] == 0 && !closure(e)) return std::nullopt;

    // Linear extension (Kahn, smallest id first). The orientation of a
    // comparability graph is acyclic, so this consumes every vertex.
    std::vector<std::vector<int>> out(static_cast<size_t>(n) + 1);
    std::vector<int> indeg(static_cast<size_t>(n) + 1, 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (st.orient[e] < 0) std::swap(u, v);
        out[u].push_back(v);
        ++indeg[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> topoPos(static_cast<size_t>(n) + 1, 0);
    int next = 0;
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        topoPos[v] = ++next;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (next != n) throw std::logic_error("comparability_ordering: orientation has a cycle");

    // Transitivity spot-check of the forced orientation.
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (st.orient[e] < 0) std::swap(u, v);
        for (int w : out[v]) {
            const int f = st.edge_id(u, w);
            if (!g.adjacent(u, w) || st.orient[f] != (u < w ? +1 : -1))
                throw std::logic_error("comparability_ordering: orientation not transitive");
        }
    }

    // Restrict to K, in topological position order.
    std::vector<int> ks = p.clique;
    std::sort(ks.begin(), ks.end(), [&](int a, int b) { return topoPos[a] < topoPos[b]; });
    const int kSize = static_cast<int>(p.clique.size());
    std::vector<int> cliqueIndex(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < kSize; ++i) cliqueIndex[p.clique[i]] = i + 1;
    std::vector<int> seq(kSize);
    for (int i = 0; i < kSize; ++i) seq[i] = cliqueIndex[ks[i]];

    ComparabilityCertificate cert;
    cert.tau = CliqueOrdering::from_sequence(seq);
    const int s = static_cast<int>(p.stable.size());
    cert.prefixLen.assign(static_cast<size_t>(s) + 1, 0);
    cert.suffixLen.assign(static_cast<size_t>(s) + 1, 0);
    for (int j = 0; j < s; ++j) {
        const int v = p.stable[j];
        int nl = 0, nr = 0;
        for (int w : g.neighbours(v)) (topoPos[w] < topoPos[v] ? nl : nr)++;
        cert.prefixLen[j + 1] = nl;
        cert.suffixLen[j + 1] = nr;
        // Certificate shape check: positions of N(v) must be exactly the
        // first nl and the last nr positions of tau.
        for (int w : g.neighbours(v)) {
            const int pp = cert.tau.pos[cliqueIndex[w]];
            if (pp > nl && pp <= kSize - nr)
                throw std::logic_error("comparability_ordering: prefix/suffix shape violated");
        }
    }
    return cert;
}

DiameterResult diameter_comparability(const SparseSplitGraph& sg,
                                      const ComparabilityCertificate& cert) {
    const int k = sg.clique_size();
    const int s = sg.stable_count();
    if (cert.tau.side != CliqueOrdering::Side::OverK || cert.tau.size() != k ||
        !cert.tau.is_permutation() ||
        cert.prefixLen.size() != static_cast<size_t>(s) + 1 ||
        cert.suffixLen.size() != static_cast<size_t>(s) + 1)
        throw CertificateViolationError("diameter_comparability: malformed certificate");

    for (int v = 1; v <= s; ++v) {
        const int nl = cert.prefixLen[v], nr = cert.suffixLen[v];
        if (nl < 0 || nr < 0 || nl + nr != sg.degree(v))
            throw CertificateViolationError("diameter_comparability: certificate sizes");
        for (int idx : sg.neighbours(v)) {
            const int pp = cert.tau.pos[idx];
            if (pp > nl && pp <= k - nr)
                throw CertificateViolationError(
                    "diameter_comparability: neighbourhood is not prefix + suffix");
        }
    }

    DiameterResult res;
    if (s == 0) {
        res.value = sg.vertex_count() == 1 ? 0 : 1;
        return res;
    }
    res.value = 2;
    if (s == 1) return res;

    // Vertices with both parts nonempty are at distance two from everything
    // in S (nonempty prefixes pairwise intersect, same for suffixes). Only a
    // pure-prefix / pure-suffix pair can realize distance three, and the
    // shortest prefix against the shortest suffix decides it.
    int minL = k + 1, minR = k + 1;
    for (int v = 1; v <= s; ++v) {
        if (cert.suffixLen[v] == 0) minL = std::min(minL, cert.prefixLen[v]);
        if (cert.prefixLen[v] == 0) minR = std::min(minR, cert.suffixLen[v]);
    }
    if (minL <= k && minR <= k && minL + minR <= k) {
        res.value = 3;
        int witness = 0;
        for (int v = 1; v <= s; ++v) {
            const bool farLeft = cert.suffixLen[v] == 0 && cert.prefixLen[v] + minR <= k;
            const bool farRight = cert.prefixLen[v] == 0 && minL + cert.suffixLen[v] <= k;
            if (farLeft || farRight) {
                const int label = sg.stable_label(v);
                if (witness == 0 || label < witness) witness = label;
            }
        }
        res.witness = witness;
    }
    return res;
}

} // namespace splitdiam
