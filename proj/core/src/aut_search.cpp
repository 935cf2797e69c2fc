#include "circstab/aut_search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace circstab {

SearchGraph SearchGraph::from_graph(const DenseGraph& g) {
    SearchGraph sg;
    sg.n = g.vertex_count;
    sg.planes.push_back(g.adj);
    sg.colors = g.colors;
    return sg;
}

SearchGraph SearchGraph::from_colored_digraph(int n,
                                              const std::vector<std::vector<int>>& out_colors) {
    SearchGraph sg;
    sg.n = n;
    for (const auto& edges_flat : out_colors) {
        // edges_flat holds (u, v) pairs flattened
        std::vector<BitSet128> out(n), in(n);
        for (std::size_t i = 0; i + 1 < edges_flat.size(); i += 2) {
            out[edges_flat[i]].set(edges_flat[i + 1]);
            in[edges_flat[i + 1]].set(edges_flat[i]);
        }
        sg.planes.push_back(std::move(out));
        sg.planes.push_back(std::move(in));
    }
    return sg;
}

namespace {

// Ordered partition of [0, n): `elems` is a vertex arrangement, cells are
// contiguous ranges. Splitting reorders within a range, so a cell start
// position stays a cell start forever.
struct OPartition {
    std::vector<int> elems;
    std::vector<int> pos;       // pos[v] = index of v in elems
    std::vector<int> cell_len;  // cell_len[start] = cell length, 0 elsewhere

    int cell_start_of(int v) const {
        int p = pos[v];
        while (cell_len[p] == 0) --p;
        return p;
    }
    bool discrete(int n) const {
        for (int s = 0; s < n; ++s)
            if (cell_len[s] != 1) return false;
        return true;
    }
};

class AutSearcher {
public:
    AutSearcher(const SearchGraph& sg, std::uint64_t budget) : sg_(sg), budget_(budget) {}

    std::vector<Perm> run() {
        OPartition root = initial_partition();
        std::vector<int> queue;
        for (int s = 0; s < sg_.n;) {
            queue.push_back(s);
            s += root.cell_len[s];
        }
        refine(root, queue);
        dfs(root, 0, /*on_first_path=*/true);
        return gens_;
    }

private:
    static constexpr int kNoBackjump = std::numeric_limits<int>::max();

    const SearchGraph& sg_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;

    std::vector<Perm> gens_;
    std::vector<int> gen_level_;  // common prefix length with the first path

    std::vector<int> first_path_;
    std::vector<std::vector<int>> first_inv_;  // refinement cell-length trace per depth
    std::vector<int> first_leaf_;
    bool have_first_leaf_ = false;
    std::vector<int> cur_path_;

    OPartition initial_partition() const {
        OPartition p;
        p.elems.resize(sg_.n);
        std::iota(p.elems.begin(), p.elems.end(), 0);
        if (!sg_.colors.empty()) {
            std::stable_sort(p.elems.begin(), p.elems.end(),
                             [&](int a, int b) { return sg_.colors[a] < sg_.colors[b]; });
        }
        p.pos.resize(sg_.n);
        p.cell_len.assign(sg_.n, 0);
        int start = 0;
        for (int i = 0; i < sg_.n; ++i) {
            p.pos[p.elems[i]] = i;
            if (i + 1 == sg_.n || (!sg_.colors.empty() &&
                                   sg_.colors[p.elems[i + 1]] != sg_.colors[p.elems[i]])) {
                p.cell_len[start] = i + 1 - start;
                start = i + 1;
            }
        }
        return p;
    }

    // Iterated neighborhood-count splitting until equitable w.r.t. every
    // plane. `queue` holds cell starts pending as splitters.
    void refine(OPartition& p, std::vector<int>& queue) const {
        std::vector<char> queued(sg_.n, 0);
        for (int s : queue) queued[s] = 1;
        std::size_t head = 0;
        std::vector<int> cnt(sg_.n);
        while (head < queue.size()) {
            int ws = queue[head++];
            queued[ws] = 0;
            BitSet128 wbits;
            for (int i = ws; i < ws + p.cell_len[ws]; ++i) wbits.set(p.elems[i]);
            for (const auto& plane : sg_.planes) {
                for (int cs = 0; cs < sg_.n;) {
                    int len = p.cell_len[cs];
                    if (len <= 1) {
                        cs += std::max(1, len);
                        continue;
                    }
                    int lo = sg_.n + 1, hi = -1;
                    for (int i = cs; i < cs + len; ++i) {
                        int c = plane[p.elems[i]].count_and(wbits);
                        cnt[p.elems[i]] = c;
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    if (lo != hi) {
                        std::stable_sort(p.elems.begin() + cs, p.elems.begin() + cs + len,
                                         [&](int a, int b) { return cnt[a] < cnt[b]; });
                        int sub = cs;
                        for (int i = cs; i < cs + len; ++i) {
                            p.pos[p.elems[i]] = i;
                            if (i + 1 == cs + len || cnt[p.elems[i + 1]] != cnt[p.elems[i]]) {
                                p.cell_len[sub] = i + 1 - sub;
                                if (!queued[sub]) {
                                    queued[sub] = 1;
                                    queue.push_back(sub);
                                }
                                sub = i + 1;
                            }
                        }
                    }
                    cs += len;
                }
            }
        }
    }

    std::vector<int> invariant(const OPartition& p) const {
        std::vector<int> inv;
        for (int s = 0; s < sg_.n;) {
            inv.push_back(p.cell_len[s]);
            s += p.cell_len[s];
        }
        return inv;
    }

    int target_cell(const OPartition& p) const {
        int best = -1, best_len = 1;
        for (int s = 0; s < sg_.n;) {
            int len = p.cell_len[s];
            if (len > best_len) {
                best = s;
                best_len = len;
            }
            s += len;
        }
        return best;  // -1 when discrete
    }

    bool is_automorphism(const Perm& sigma) const {
        if (!sg_.colors.empty())
            for (int v = 0; v < sg_.n; ++v)
                if (sg_.colors[v] != sg_.colors[sigma(v)]) return false;
        for (const auto& plane : sg_.planes) {
            for (int v = 0; v < sg_.n; ++v) {
                BitSet128 mapped;
                plane[v].for_each([&](int w) { mapped.set(sigma(w)); });
                if (!(mapped == plane[sigma(v)])) return false;
            }
        }
        return true;
    }

    // Orbit pruning at first-path nodes: union-find over the generators
    // that fix the first d path points.
    std::vector<int> orbit_find(int depth) const {
        std::vector<int> parent(sg_.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gen_level_[i] < depth) continue;
            for (int x = 0; x < sg_.n; ++x) {
                int a = find(x), b = find(gens_[i](x));
                if (a != b) parent[a] = b;
            }
        }
        for (int x = 0; x < sg_.n; ++x) parent[x] = find(x);
        return parent;
    }

    int handle_leaf(const OPartition& p) {
        if (!have_first_leaf_) {
            first_leaf_ = p.elems;
            have_first_leaf_ = true;
            return kNoBackjump;
        }
        Perm sigma = Perm::identity(sg_.n);
        for (int i = 0; i < sg_.n; ++i) sigma[first_leaf_[i]] = static_cast<std::uint8_t>(p.elems[i]);
        if (!is_automorphism(sigma)) return kNoBackjump;
        int level = 0;
        while (level < static_cast<int>(cur_path_.size()) &&
               level < static_cast<int>(first_path_.size()) &&
               cur_path_[level] == first_path_[level])
            ++level;
        gens_.push_back(sigma);
        gen_level_.push_back(level);
        return level;
    }

    int dfs(const OPartition& p, int depth, bool on_first_path) {
        if (++nodes_ > budget_)
            throw BudgetExceeded("automorphism search: node budget exceeded");
        auto inv = invariant(p);
        if (on_first_path) {
            first_inv_.push_back(inv);
        } else if (depth >= static_cast<int>(first_inv_.size()) || inv != first_inv_[depth]) {
            return kNoBackjump;  // cannot correspond to the first path
        }
        int ts = target_cell(p);
        if (ts < 0) return handle_leaf(p);

        std::vector<int> cell(p.elems.begin() + ts, p.elems.begin() + ts + p.cell_len[ts]);
        std::sort(cell.begin(), cell.end());
        std::vector<int> branched;
        for (std::size_t ci = 0; ci < cell.size(); ++ci) {
            int v = cell[ci];
            bool first_child = on_first_path && ci == 0;
            if (on_first_path && !first_child) {
                auto root_of = orbit_find(depth);
                bool covered = false;
                for (int u : branched)
                    if (root_of[u] == root_of[v]) {
                        covered = true;
                        break;
                    }
                if (covered) continue;
            }
            if (first_child) first_path_.push_back(v);
            cur_path_.push_back(v);
            OPartition child = p;
            individualize(child, ts, v);
            std::vector<int> queue{ts, ts + 1};
            if (child.cell_len[ts + 1] == 0) queue.pop_back();
            refine(child, queue);
            int r = dfs(child, depth + 1, first_child);
            cur_path_.pop_back();
            branched.push_back(v);
            if (r < depth) return r;
        }
        return kNoBackjump;
    }

    static void individualize(OPartition& p, int cell_start, int v) {
        int len = p.cell_len[cell_start];
        int vi = p.pos[v];
        std::swap(p.elems[cell_start], p.elems[vi]);
        p.pos[p.elems[vi]] = vi;
        p.pos[p.elems[cell_start]] = cell_start;
        p.cell_len[cell_start] = 1;
        if (len > 1) p.cell_len[cell_start + 1] = len - 1;
    }
};

}  // namespace

std::vector<Perm> automorphism_generators(const SearchGraph& sg, std::uint64_t node_budget) {
    if (sg.n == 0) return {};
    AutSearcher searcher(sg, node_budget);
    return searcher.run();
}

GeneratedGroup automorphisms(const DenseGraph& g, std::uint64_t node_budget) {
    auto gens = automorphism_generators(SearchGraph::from_graph(g), node_budget);
    return GeneratedGroup::from_generators(g.vertex_count, std::move(gens));
}

GeneratedGroup partition_kernel(const DenseGraph& g, const IndexPartition& p,
                                std::uint64_t node_budget) {
    if (!p.covers(g.vertex_count)) throw ValidationError("partition_kernel: partition must cover vertices");
    SearchGraph sg = SearchGraph::from_graph(g);
    auto block = p.block_index(g.vertex_count);
    int nblocks = static_cast<int>(p.blocks.size());
    if (sg.colors.empty()) {
        sg.colors = block;
    } else {
        for (int v = 0; v < g.vertex_count; ++v) sg.colors[v] = sg.colors[v] * nblocks + block[v];
    }
    auto gens = automorphism_generators(sg, node_budget);
    return GeneratedGroup::from_generators(g.vertex_count, std::move(gens));
}

GeneratedGroup partition_kernel(const GeneratedGroup& g, const IndexPartition& p,
                                std::uint64_t element_cap) {
    if (!p.covers(g.degree())) throw ValidationError("partition_kernel: partition must cover domain");
    auto block = p.block_index(g.degree());
    std::vector<Perm> kept;
    g.for_each_element(
        [&](const Perm& e) {
            for (int x = 0; x < g.degree(); ++x)
                if (block[e(x)] != block[x]) return true;
            if (!e.is_identity()) kept.push_back(e);
            return true;
        },
        element_cap);
    return GeneratedGroup::from_generators(g.degree(), std::move(kept));
}

bool are_isomorphic(const DenseGraph& a, const DenseGraph& b, std::uint64_t node_budget) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    if (!is_connected(a) || !is_connected(b))
        throw ValidationError("are_isomorphic: connected graphs only");
    int n = a.vertex_count;
    DenseGraph u(2 * n);
    for (int v = 0; v < n; ++v) {
        a.adj[v].for_each([&](int w) { u.adj[v].set(w); });
        b.adj[v].for_each([&](int w) { u.adj[v + n].set(w + n); });
    }
    auto group = automorphisms(u, node_budget);
    auto orb = group.orbits();
    auto idx = orb.block_index(2 * n);
    for (int v = n; v < 2 * n; ++v)
        if (idx[v] == idx[0]) return true;
    return false;
}

}  // namespace circstab
