#include "splitdiam/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "splitdiam/errors.hpp"

namespace splitdiam {

namespace {

// Next non-comment, non-blank line.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

SparseSplitGraph read_split_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("split graph: missing header");
    std::istringstream header(line);
    std::string p, kind;
    int kSize = 0, sSize = 0;
    if (!(header >> p >> kind >> kSize >> sSize) || p != "p" || kind != "split")
        throw ParseError("split graph: bad header, expected 'p split <kSize> <sSize>'");
    if (kSize < 1 || sSize < 0) throw ParseError("split graph: bad sizes");

    std::vector<std::vector<int>> lists(static_cast<size_t>(sSize));
    std::vector<char> seen(static_cast<size_t>(sSize) + 1, 0);
    for (int i = 0; i < sSize; ++i) {
        if (!next_line(in, line)) throw ParseError("split graph: missing stable line");
        std::istringstream row(line);
        std::string tag;
        int idx = 0;
        if (!(row >> tag >> idx) || tag != "s" || idx < 1 || idx > sSize || seen[idx])
            throw ParseError("split graph: bad stable line: " + line);
        seen[idx] = 1;
        int c;
        while (row >> c) lists[idx - 1].push_back(c);
        if (!row.eof()) throw ParseError("split graph: trailing junk: " + line);
    }
    try {
        return SparseSplitGraph::with_canonical_ids(kSize, std::move(lists));
    } catch (const InvalidPartitionError& e) {
        throw ParseError(std::string("split graph: ") + e.what());
    }
}

void write_split_graph(std::ostream& out, const SparseSplitGraph& sg) {
    out << "p split " << sg.clique_size() << ' ' << sg.stable_count() << '\n';
    for (int v = 1; v <= sg.stable_count(); ++v) {
        out << "s " << v;
        for (int idx : sg.neighbours(v)) out << ' ' << idx;
        out << '\n';
    }
}

Graph read_edge_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("edge graph: missing header");
    std::istringstream header(line);
    std::string p, kind;
    int n = 0;
    long long m = 0;
    if (!(header >> p >> kind >> n >> m) || p != "p" || kind != "edge")
        throw ParseError("edge graph: bad header, expected 'p edge <n> <m>'");
    if (n < 1 || m < 0) throw ParseError("edge graph: bad sizes");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("edge graph: missing edge line");
        std::istringstream row(line);
        std::string tag;
        int u = 0, v = 0;
        if (!(row >> tag >> u >> v) || tag != "e") throw ParseError("edge graph: bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge graph: ") + e.what());
    }
}

void write_edge_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

bool file_is_split_format(std::istream& in) {
    const auto at = in.tellg();
    std::string line;
    if (!next_line(in, line)) throw ParseError("graph file: empty");
    in.seekg(at);
    std::istringstream header(line);
    std::string p, kind;
    header >> p >> kind;
    return kind == "split";
}

CliqueOrdering read_ordering(std::istream& in, CliqueOrdering::Side side) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("ordering: empty file");
    std::istringstream row(line);
    std::vector<int> seq;
    int x;
    while (row >> x) seq.push_back(x);
    if (!row.eof()) throw ParseError("ordering: trailing junk");
    try {
        return CliqueOrdering::from_sequence(seq, side);
    } catch (const OrderingMismatchError&) {
        throw; // caller maps to its own error channel
    }
}

void write_ordering(std::ostream& out, const CliqueOrdering& tau) {
    const auto seq = tau.sequence();
    for (size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
    out << '\n';
}

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    return out;
}
} // namespace

SparseSplitGraph load_split_graph(const std::string& path) {
    auto in = open_in(path);
    return read_split_graph(in);
}
Graph load_edge_graph(const std::string& path) {
    auto in = open_in(path);
    return read_edge_graph(in);
}
CliqueOrdering load_ordering(const std::string& path, CliqueOrdering::Side side) {
    auto in = open_in(path);
    return read_ordering(in, side);
}
void save_split_graph(const std::string& path, const SparseSplitGraph& sg) {
    auto out = open_out(path);
    write_split_graph(out, sg);
}
void save_edge_graph(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_edge_graph(out, g);
}
void save_ordering(const std::string& path, const CliqueOrdering& tau) {
    auto out = open_out(path);
    write_ordering(out, tau);
}

} // namespace splitdiam
