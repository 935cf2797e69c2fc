#pragma once

#include <optional>
#include <vector>

#include "circstab/bits.hpp"
#include "circstab/connection_set.hpp"
#include "circstab/zn.hpp"

namespace circstab {

// Simple undirected graph on at most 128 vertices with bitset adjacency
// rows and an optional vertex coloring (empty = uncolored).
struct DenseGraph {
    int vertex_count = 0;
    std::vector<BitSet128> adj;
    std::vector<int> colors;

    DenseGraph() = default;
    explicit DenseGraph(int n);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    bool is_colored() const { return !colors.empty(); }
    int color_of(int v) const { return colors.empty() ? 0 : colors[v]; }
    int edge_count() const;
};

// Cay(Z_n, S): edge (x, y) iff y - x in S.
DenseGraph build_circulant(const ConnectionSet& s);

// Tensor double Gamma x K_2 with the vertex encoding (v, i) -> v + n*i.
// The layer index is recorded as the vertex coloring.
DenseGraph tensor_k2(const DenseGraph& g);

// Vertex index of the cover generator a = (0, 1) in tensor_k2 output.
inline int cover_a_vertex(int base_vertex_count) { return base_vertex_count; }

bool is_connected(const DenseGraph& g);

// 2-coloring when bipartite (per-vertex side in {0,1}), nullopt otherwise.
std::optional<std::vector<int>> bipartition(const DenseGraph& g);
inline bool is_bipartite(const DenseGraph& g) { return bipartition(g).has_value(); }

// No two vertices share a neighborhood. For circulants the fast path is
// circulant_reduced_shift in connection_set.hpp.
bool is_reduced(const DenseGraph& g);

// Strip the vertex coloring (the stability oracle compares uncolored
// automorphism group orders).
DenseGraph uncolored(DenseGraph g);

}  // namespace circstab
