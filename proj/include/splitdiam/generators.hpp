#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splitdiam/graph.hpp"
#include "splitdiam/ordering.hpp"
#include "splitdiam/split_graph.hpp"

namespace splitdiam {

// n-sun: clique u_1..u_n plus stable v_1..v_n with N(v_i) = {u_i, u_{i+1}}
// (cyclically). Labels: clique 1..n, stable n+1..2n. Requires n >= 3.
std::pair<Graph, SplitPartition> gen_sun(int n);

// Thin spider: the clique/stable edges form a perfect matching,
// N(v_i) = {u_i}. Labels as in gen_sun. Requires n >= 2.
std::pair<Graph, SplitPartition> gen_thin_spider(int n);

// Threshold split graph over a clique of size kSize: stable vertex i is
// adjacent to the first degreeChain[i] clique vertices, so the stable
// neighbourhoods are nested prefixes. degreeChain must be non-decreasing,
// positive, with maximum strictly below kSize (a stable vertex adjacent to
// the whole clique would contradict clique maximality).
std::pair<Graph, SplitPartition> gen_threshold(const std::vector<int>& degreeChain, int kSize);

// The graph of a split graph that is interval but has no width-1 clique
// ordering: K = {1,2,3,4} and stable neighbourhoods {1,2}, {1,2,3}, {2,3,4},
// {2,4}. Labels: stable 5..8.
std::pair<Graph, SplitPartition> gen_fig1();

// Random split graph with a planted identity clique ordering of width at
// most k. Every stable vertex receives r ~ U{1..k} runs with uniformly
// chosen lengths (capped so that instances stay sparse enough relative to
// kSize) and uniformly placed gaps via stars-and-bars. Deterministic per
// (kSize, sSize, k, seed): all draws come from a single mt19937_64 stream in
// the documented order. Requires 1 <= k <= ceil(kSize/2) and kSize >= 2
// whenever sSize >= 1.
std::pair<SparseSplitGraph, CliqueOrdering> gen_random_kci(int kSize, int sSize, int k,
                                                           std::uint64_t seed);

// Random split graph whose complement has a planted stable-side ordering of
// width about k: each clique vertex's stable neighbourhood is laid out as at
// most k+1 runs under the identity ordering of S, with run lengths chosen so
// the edge count stays roughly independent of k. Used by the complement
// scaling benchmarks. Deterministic per parameters.
std::pair<SparseSplitGraph, CliqueOrdering> gen_random_complement_kci(int kSize, int sSize,
                                                                      int k,
                                                                      std::uint64_t seed);

// Diameter-two reduction: from any connected graph g, the split graph on a
// clique copy V' of V plus stable V, where u in V is adjacent to the copies
// of N[u]. diam(g) <= 2 iff the result has diameter <= 2. When g has
// universal vertices, the smallest one joins the clique side so that the
// clique stays maximal. Throws DisconnectedError.
SparseSplitGraph reduce_diam2(const Graph& g);

// Minimum-degree-two gadget: adds clique vertices a, b and stable vertex v0,
// with a adjacent to the stable records in A, b to those in B, both to the
// old clique and v0, and to each other. (A, B) must partition 1..stable_count.
// Throws BadPartitionError.
SparseSplitGraph gadget_min_degree_two(const SparseSplitGraph& sg, const std::vector<int>& A,
                                       const std::vector<int>& B);

} // namespace splitdiam
