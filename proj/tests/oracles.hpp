#pragma once

// Test-only oracles, independent of the library's search paths: exhaustive
// filtration over all permutations, naive set arithmetic, and friends.

#include <algorithm>
#include <numeric>
#include <vector>

#include "circstab/graph.hpp"
#include "circstab/perm.hpp"

namespace oracles {

// All automorphisms of a (possibly colored) graph by filtering every
// permutation of the vertices. Only sane for <= 8 vertices.
inline std::vector<circstab::Perm> brute_force_automorphisms(const circstab::DenseGraph& g) {
    int n = g.vertex_count;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<circstab::Perm> out;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (g.is_colored() && g.colors[v] != g.colors[img[v]]) ok = false;
            for (int w = v + 1; w < n && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(img[v], img[w])) ok = false;
        }
        if (ok) {
            std::vector<std::uint8_t> bytes(img.begin(), img.end());
            out.emplace_back(std::move(bytes));
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Every nonempty symmetric 0-free subset of Z_n, as bit masks.
inline std::vector<std::uint64_t> all_symmetric_sets(int n) {
    std::vector<int> reps;
    for (int s = 1; s <= n / 2; ++s) reps.push_back(s);
    std::vector<std::uint64_t> out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << reps.size()); ++pick) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if ((pick >> i) & 1u) {
                mask |= std::uint64_t{1} << reps[i];
                mask |= std::uint64_t{1} << ((n - reps[i]) % n);
            }
        out.push_back(mask);
    }
    return out;
}

}  // namespace oracles
