#pragma once

#include <cstdint>
#include <vector>

#include "circstab/graph.hpp"
#include "circstab/group.hpp"

namespace circstab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Input to the automorphism search: one or more adjacency "planes" over a
// common vertex set, plus an initial coloring. A simple graph is one
// symmetric plane; a k-colored digraph contributes an out- and an
// in-plane per color.
struct SearchGraph {
    int n = 0;
    std::vector<std::vector<BitSet128>> planes;
    std::vector<int> colors;  // empty = uncolored

    static SearchGraph from_graph(const DenseGraph& g);
    static SearchGraph from_colored_digraph(int n, const std::vector<std::vector<int>>& out_colors);
};

// Generators of the full color- and plane-preserving automorphism group.
// Deterministic for fixed input: equitable refinement (iterated
// neighborhood-count splitting), first largest target cell, ascending
// branch order. Throws BudgetExceeded past `node_budget` search nodes.
std::vector<Perm> automorphism_generators(const SearchGraph& sg,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

GeneratedGroup automorphisms(const DenseGraph& g,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Subgroup of Aut(g) fixing every block of p setwise, computed by adding
// the block constraint to the refinement coloring.
GeneratedGroup partition_kernel(const DenseGraph& g, const IndexPartition& p,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// Generic kernel for an arbitrary generated group: walks the elements.
GeneratedGroup partition_kernel(const GeneratedGroup& g, const IndexPartition& p,
                                std::uint64_t element_cap = 1u << 20);

// Isomorphism test for connected uncolored graphs via the automorphism
// group of the disjoint union.
bool are_isomorphic(const DenseGraph& a, const DenseGraph& b,
                    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace circstab
