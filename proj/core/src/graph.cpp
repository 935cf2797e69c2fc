#include "circstab/graph.hpp"

#include <unordered_set>

namespace circstab {

DenseGraph::DenseGraph(int n) : vertex_count(n), adj(n) {
    if (n < 0 || n > 128) throw ValidationError("DenseGraph: vertex count out of range");
}

void DenseGraph::add_edge(int u, int v) {
    if (u == v) throw ValidationError("DenseGraph: no self-loops");
    adj[u].set(v);
    adj[v].set(u);
}

int DenseGraph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

DenseGraph build_circulant(const ConnectionSet& s) {
    DenseGraph g(s.n);
    for (int x = 0; x < s.n; ++x)
        for (int d = 1; d < s.n; ++d)
            if (s.contains(d)) g.adj[x].set(mod(x + d, s.n));
    return g;
}

DenseGraph tensor_k2(const DenseGraph& g) {
    int n = g.vertex_count;
    DenseGraph h(2 * n);
    for (int v = 0; v < n; ++v)
        g.adj[v].for_each([&](int w) {
            h.adj[v].set(w + n);
            h.adj[w + n].set(v);
        });
    h.colors.assign(2 * n, 0);
    for (int v = n; v < 2 * n; ++v) h.colors[v] = 1;
    return h;
}

bool is_connected(const DenseGraph& g) {
    if (g.vertex_count == 0) return true;
    BitSet128 seen;
    seen.set(0);
    std::vector<int> stack{0};
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.adj[v].for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
                ++count;
            }
        });
    }
    return count == g.vertex_count;
}

std::optional<std::vector<int>> bipartition(const DenseGraph& g) {
    std::vector<int> side(g.vertex_count, -1);
    for (int root = 0; root < g.vertex_count; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool odd_cycle = false;
            g.adj[v].for_each([&](int w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    odd_cycle = true;
                }
            });
            if (odd_cycle) return std::nullopt;
        }
    }
    return side;
}

bool is_reduced(const DenseGraph& g) {
    std::unordered_set<BitSet128> seen;
    for (const auto& row : g.adj)
        if (!seen.insert(row).second) return false;
    return true;
}

DenseGraph uncolored(DenseGraph g) {
    g.colors.clear();
    return g;
}

}  // namespace circstab
