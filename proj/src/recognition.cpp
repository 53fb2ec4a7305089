#include "splitdiam/recognition.hpp"

#include <stdexcept>

#include "splitdiam/errors.hpp"
#include "splitdiam/pq_tree.hpp"

namespace splitdiam {

RecognitionResult recognize_clique_interval(const SparseSplitGraph& sg) {
    const int k = sg.clique_size();
    PqTree tree(k);
    for (int v = 1; v <= sg.stable_count(); ++v) {
        const auto nb = sg.neighbours(v);
        if (nb.size() <= 1) continue; // singletons impose nothing
        if (!tree.reduce(std::vector<int>(nb.begin(), nb.end()))) return {};
    }
    RecognitionResult res;
    res.accepted = true;
    res.ordering = CliqueOrdering::from_sequence(tree.frontier());
    if (!verify_ordering_certificate(sg, *res.ordering))
        throw std::logic_error("recognize_clique_interval: frontier failed certification");
    return res;
}

bool verify_ordering_certificate(const SparseSplitGraph& sg, const CliqueOrdering& tau) {
    return width_under(sg, tau) <= 1;
}

RecognitionResult recognize_bruteforce(const SparseSplitGraph& sg) {
    if (sg.clique_size() > 10)
        throw TooLargeError("recognize_bruteforce: clique larger than 10");
    auto [k, tau] = clique_interval_number_exact(sg);
    RecognitionResult res;
    if (k <= 1) {
        res.accepted = true;
        res.ordering = std::move(tau);
    }
    return res;
}

} // namespace splitdiam
