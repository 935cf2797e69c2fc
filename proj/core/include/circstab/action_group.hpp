#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "circstab/perm.hpp"

namespace circstab {

// Fully enumerated permutation group (order <= ~5000): the cocycle solver
// needs cheap element indexing and a multiplication oracle, which a
// stabilizer chain does not give directly. Element 0 is the identity;
// enumeration order is the deterministic BFS over the generators.
class ActionGroup {
public:
    static ActionGroup generate(int degree, std::vector<Perm> generators,
                                std::size_t element_cap = 5001);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const Perm& element(int i) const { return elements_[i]; }
    const std::vector<int>& generator_indices() const { return gen_indices_; }

    int index_of(const Perm& p) const;  // -1 when absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int mul(int i, int j) const;        // index of element(i) * element(j)
    int inv(int i) const;

    // closure of the given element indices inside this group
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;

    // the subgroup as its own ActionGroup (same degree)
    ActionGroup subgroup(const std::vector<int>& gens) const;

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<int> gen_indices_;
    std::unordered_map<Perm, int> index_;
};

}  // namespace circstab
