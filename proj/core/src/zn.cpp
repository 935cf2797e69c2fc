#include "circstab/zn.hpp"

#include <algorithm>
#include <numeric>

namespace circstab {

int gcd(int a, int b) { return std::gcd(a, b); }

bool is_squarefree(int n) {
    if (n < 1) throw ValidationError("is_squarefree: n must be positive");
    for (int p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

std::vector<int> units(int n) {
    if (n < 1) throw ValidationError("units: n must be positive");
    std::vector<int> out;
    for (int l = 1; l < n; ++l)
        if (std::gcd(l, n) == 1) out.push_back(l);
    return out;
}

CrtSplit::CrtSplit(int n_, int l1_) : n(n_), l1(l1_) {
    if (n < 1 || l1 < 1 || n % l1 != 0)
        throw ValidationError("crt_split: l1 must divide n");
    l2 = n / l1;
    if (std::gcd(l1, l2) != 1)
        throw ValidationError("crt_split: factors not coprime, hypothesis violated");
}

std::pair<int, int> CrtSplit::from_zn(int v) const {
    v = mod(v, n);
    // phi(x, y) = x*l2 mod l1 componentwise; invert with l2^{-1} mod l1
    auto inv_mod = [](int a, int m) {
        if (m == 1) return 0;
        for (int t = 1; t < m; ++t)
            if (t * (a % m) % m == 1) return t;
        throw ValidationError("crt_split: no inverse");
    };
    int x = mod(v % l1 * inv_mod(l2 % l1, l1), l1);
    int y = mod(v % l2 * inv_mod(l1 % l2, l2), l2);
    return {x, y};
}

void IndexPartition::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

IndexPartition IndexPartition::singletons(int ground_size) {
    IndexPartition p;
    for (int i = 0; i < ground_size; ++i) p.blocks.push_back({i});
    return p;
}

IndexPartition IndexPartition::one_block(int ground_size) {
    IndexPartition p;
    p.blocks.emplace_back();
    for (int i = 0; i < ground_size; ++i) p.blocks[0].push_back(i);
    return p;
}

int IndexPartition::ground_size() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
}

bool IndexPartition::covers(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> IndexPartition::block_index(int n) const {
    std::vector<int> idx(n, -1);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int v : blocks[b]) idx[v] = b;
    return idx;
}

bool IndexPartition::is_fragmentation_of(const IndexPartition& coarser) const {
    int n = std::max(ground_size(), coarser.ground_size());
    auto coarse_idx = coarser.block_index(n);
    for (const auto& b : blocks) {
        int target = coarse_idx[b.front()];
        if (target < 0) return false;
        for (int v : b)
            if (coarse_idx[v] != target) return false;
    }
    return true;
}

IndexPartition coset_partition(const CyclicSubgroup& subgroup) {
    int n = subgroup.modulus;
    int d = subgroup.generator;
    IndexPartition p;
    for (int rep = 0; rep < d; ++rep) {
        std::vector<int> block;
        for (int x = rep; x < n; x += d) block.push_back(x);
        p.blocks.push_back(std::move(block));
    }
    p.canonicalize();
    return p;
}

}  // namespace circstab
