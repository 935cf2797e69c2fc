#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circstab/aut_search.hpp"
#include "circstab/connection_set.hpp"
#include "circstab/graph.hpp"
#include "circstab/zn.hpp"

namespace circstab {

// Small abelian ambient group for Schur rings: Z_n, or Z_n x <a> with the
// cover encoding v + n*i (addition componentwise, NOT Z_{2n}).
struct AbelianAmbient {
    int n = 1;
    bool doubled = false;

    static AbelianAmbient cyclic(int n) { return {n, false}; }
    static AbelianAmbient cover(int n) { return {n, true}; }

    int size() const { return doubled ? 2 * n : n; }
    int add(int u, int v) const {
        if (!doubled) return mod(u + v, n);
        int layer = (u / n + v / n) % 2;
        return mod(u % n + v % n, n) + n * layer;
    }
    int neg(int u) const {
        if (!doubled) return mod(-u, n);
        return mod(-(u % n), n) + (u / n) * n;
    }
};

// Partition of the ambient group into the orbits of a point stabilizer
// (basic sets of a transitivity module).
struct SchurRing {
    AbelianAmbient ambient;
    IndexPartition basic_sets;

    const std::vector<int>& basic_set_of(int g) const;
};

// V(Aut(Sigma)_e, G): basic sets = orbits of the identity-vertex
// stabilizer of Aut(Sigma).
SchurRing transitivity_module(const DenseGraph& sigma, const AbelianAmbient& ambient,
                              std::uint64_t node_budget = kDefaultNodeBudget);

// Convenience builders: the ring of a circulant, and of its tensor double.
SchurRing transitivity_module(const ConnectionSet& s,
                              std::uint64_t node_budget = kDefaultNodeBudget);
SchurRing cover_transitivity_module(const ConnectionSet& s,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

struct RingViolation {
    int x_block, y_block;   // convolved basic sets
    int g1, g2;             // elements of one basic set with unequal counts
};

// Schur condition: the convolution of any two basic-set indicator vectors
// is constant on every basic set.
std::optional<RingViolation> verify_ring_axioms(const SchurRing& ring);

// Inverse-closure axiom: -X is a basic set for every basic set X.
bool inverse_closed(const SchurRing& ring);

// rad(X) = {g : g + X = X}, as a sorted subgroup element list.
std::vector<int> radical_of(const std::vector<int>& x, const AbelianAmbient& ambient);

enum class DichotomyBranch { ConditionIWitness, BasicSetAm, Violation };

struct DichotomyResult {
    DichotomyBranch branch;
    std::optional<int> witness_h;
    std::vector<int> basic_set_of_a;
};

// Lemma dichotomy for unstable connected nonbipartite Cay(Z_2m, S), m odd:
// either condition (i) holds or {a, m+a} is a basic set of the cover ring.
// Violation is the falsification branch.
DichotomyResult dichotomy_check(const ConnectionSet& s,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// JSON dump {order, basic_sets: [[...], ...]} used by golden tests.
std::string ring_to_json(const SchurRing& ring);

}  // namespace circstab
