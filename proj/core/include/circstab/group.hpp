#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "circstab/perm.hpp"
#include "circstab/zn.hpp"

namespace circstab {

// Automorphism group orders routinely exceed 64 bits (S_26 already does),
// so order bookkeeping uses an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

// Finitely generated permutation group with a deterministic
// base/stabilizer-chain certificate (Schreier-Sims).
//
// Base points are chosen from `base_hint` first, then in natural order
// (smallest moved point), so identical generator lists produce identical
// chains.
class GeneratedGroup {
public:
    GeneratedGroup() = default;

    static GeneratedGroup from_generators(int degree, std::vector<Perm> generators,
                                          std::vector<int> base_hint = {});

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return input_gens_; }
    const std::vector<int>& base() const { return base_; }

    BigInt order() const;
    bool contains(const Perm& p) const;
    bool is_trivial() const { return levels_.empty(); }

    // Strong generators fixing base()[0..k-1] pointwise (k = level).
    std::vector<Perm> level_generators(int level) const;

    // Orbits of the whole group on [0, degree), canonically ordered.
    IndexPartition orbits() const;
    bool is_transitive() const;

    // Walk every element; f may return false to stop. Throws BudgetExceeded
    // when the order exceeds `cap`.
    void for_each_element(const std::function<bool(const Perm&)>& f,
                          std::uint64_t cap = 1u << 20) const;
    std::vector<Perm> elements(std::uint64_t cap = 1u << 20) const;

    // Uniformly random element (product of random transversal reps).
    Perm random_element(std::mt19937_64& rng) const;

private:
    struct Level {
        int base_point = -1;
        std::vector<Perm> gens;
        std::vector<int> orbit;          // BFS discovery order
        std::vector<Perm> transversal;   // by point; empty Perm = not in orbit
    };

    int place(Perm g, std::size_t from);
    void rebuild_orbit(std::size_t level);
    void schreier_sims();
    Perm sift_from(Perm g, std::size_t from) const;
    int pick_base_point(const Perm& moved_by) const;

    int degree_ = 0;
    std::vector<Perm> input_gens_;
    std::vector<int> base_hint_;
    std::vector<int> base_;
    std::vector<Level> levels_;
};

// Orbits of the stabilizer of `basepoint`, from a stabilizer chain based
// at that point. Fixed points come back as singleton orbits.
IndexPartition stabilizer_orbits(const GeneratedGroup& g, int basepoint);

}  // namespace circstab
