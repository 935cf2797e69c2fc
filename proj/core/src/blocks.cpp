#include "circstab/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace circstab {

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns (kept, absorbed) roots, or (-1,-1) when already merged
    std::pair<int, int> merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return {-1, -1};
        parent[b] = a;
        return {a, b};
    }
};

IndexPartition uf_partition(UnionFind& uf, int n) {
    std::vector<std::vector<int>> buckets(n);
    for (int x = 0; x < n; ++x) buckets[uf.find(x)].push_back(x);
    IndexPartition out;
    for (auto& b : buckets)
        if (!b.empty()) out.blocks.push_back(std::move(b));
    out.canonicalize();
    return out;
}
}  // namespace

bool permutes_blocks(const Perm& sigma, const IndexPartition& p) {
    auto idx = p.block_index(sigma.degree());
    for (const auto& block : p.blocks) {
        int target = idx[sigma(block.front())];
        if (static_cast<int>(p.blocks[target].size()) != static_cast<int>(block.size()))
            return false;
        for (int v : block)
            if (idx[sigma(v)] != target) return false;
    }
    return true;
}

Perm induced_block_permutation(const Perm& sigma, const IndexPartition& p) {
    if (!permutes_blocks(sigma, p))
        throw ValidationError("induced_block_permutation: partition not invariant under sigma");
    auto idx = p.block_index(sigma.degree());
    std::vector<std::uint8_t> img(p.blocks.size());
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        img[b] = static_cast<std::uint8_t>(idx[sigma(p.blocks[b].front())]);
    return Perm(std::move(img));
}

bool is_block_system(const GeneratedGroup& g, const IndexPartition& p) {
    for (const auto& gen : g.generators())
        if (!permutes_blocks(gen, p)) return false;
    return true;
}

IndexPartition block_closure(const GeneratedGroup& g, const IndexPartition& start, int a, int b) {
    int n = g.degree();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> pending;
    auto merge = [&](int x, int y) {
        auto [kept, absorbed] = uf.merge(x, y);
        if (kept >= 0) pending.emplace_back(kept, absorbed);
    };
    for (const auto& block : start.blocks)
        for (std::size_t i = 1; i < block.size(); ++i) merge(block[0], block[i]);
    merge(a, b);
    while (!pending.empty()) {
        auto [x, y] = pending.back();
        pending.pop_back();
        for (const auto& gen : g.generators()) merge(gen(x), gen(y));
    }
    return uf_partition(uf, n);
}

IndexPartition minimal_block_system_above(const GeneratedGroup& g, const IndexPartition& p) {
    if (!g.is_transitive())
        throw ValidationError("minimal_block_system_above: group must be transitive");
    if (p.blocks.size() <= 1)
        throw ValidationError("minimal_block_system_above: no system thicker than one block");

    // Merging the block of point 0 with each other block gives every
    // candidate; keep the ones with nothing strictly between p and them.
    int anchor = p.blocks.front().front();
    std::vector<IndexPartition> candidates;
    for (std::size_t b = 1; b < p.blocks.size(); ++b) {
        auto c = block_closure(g, p, anchor, p.blocks[b].front());
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
            candidates.push_back(std::move(c));
    }
    std::vector<IndexPartition> minimal;
    for (const auto& c : candidates) {
        bool dominated = false;
        for (const auto& other : candidates)
            if (!(other == c) && other.is_fragmentation_of(c)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](const IndexPartition& a, const IndexPartition& b) {
        auto asz = a.blocks.front().size(), bsz = b.blocks.front().size();
        if (asz != bsz) return asz < bsz;
        return a.blocks < b.blocks;
    });
    return minimal.front();
}

bool is_primitive(const GeneratedGroup& g) {
    if (!g.is_transitive()) throw ValidationError("is_primitive: group must be transitive");
    int n = g.degree();
    if (n <= 2) return true;
    auto singles = IndexPartition::singletons(n);
    for (int x = 1; x < n; ++x) {
        auto c = block_closure(g, singles, 0, x);
        if (c.blocks.size() != 1) return false;
    }
    return true;
}

}  // namespace circstab
