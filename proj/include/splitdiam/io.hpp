#pragma once

#include <iosfwd>
#include <string>

#include "splitdiam/graph.hpp"
#include "splitdiam/ordering.hpp"
#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// Split graph file: '#' comment lines, a header `p split <kSize> <sSize>`,
// then one line `s <idx> <c1> <c2> ...` per stable vertex with sorted clique
// indices. Vertices take canonical labels (clique 1..kSize, stable
// kSize+1..kSize+sSize) when read back.
SparseSplitGraph read_split_graph(std::istream& in);
void write_split_graph(std::ostream& out, const SparseSplitGraph& sg);

// General graph file: header `p edge <n> <m>` and `e <u> <v>` lines.
Graph read_edge_graph(std::istream& in);
void write_edge_graph(std::ostream& out, const Graph& g);

// Peeks at the header to dispatch between the two formats.
bool file_is_split_format(std::istream& in);

// Ordering file: one whitespace-separated permutation line.
CliqueOrdering read_ordering(std::istream& in, CliqueOrdering::Side side);
void write_ordering(std::ostream& out, const CliqueOrdering& tau);

SparseSplitGraph load_split_graph(const std::string& path);
Graph load_edge_graph(const std::string& path);
CliqueOrdering load_ordering(const std::string& path, CliqueOrdering::Side side);
void save_split_graph(const std::string& path, const SparseSplitGraph& sg);
void save_edge_graph(const std::string& path, const Graph& g);
void save_ordering(const std::string& path, const CliqueOrdering& tau);

} // namespace splitdiam
