#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circstab/errors.hpp"

namespace circstab {

// Graph work is capped so a double cover fits in a 128-bit adjacency row.
inline constexpr int kMaxModulus = 64;

inline int mod(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

// Residue class x mod n with the invariant 0 <= value < modulus.
struct Residue {
    int value = 0;
    int modulus = 1;

    Residue() = default;
    Residue(int v, int n) : value(mod(v, n)), modulus(n) {
        if (n < 1) throw ValidationError("Residue: modulus must be positive");
    }
    Residue operator+(Residue o) const { return {value + o.value, modulus}; }
    Residue operator-(Residue o) const { return {value - o.value, modulus}; }
    Residue operator-() const { return {-value, modulus}; }
    bool operator==(const Residue&) const = default;
};

// Subgroup d*Z_n of Z_n, where d divides n; order is n/d.
// d = n encodes the trivial subgroup {0}, d = 1 the full group.
struct CyclicSubgroup {
    int modulus = 1;
    int generator = 1;

    CyclicSubgroup() = default;
    CyclicSubgroup(int n, int d) : modulus(n), generator(d) {
        if (n < 1 || d < 1 || n % d != 0)
            throw ValidationError("CyclicSubgroup: generator must divide modulus");
    }
    int order() const { return modulus / generator; }
    bool contains(int x) const { return mod(x, modulus) % generator == 0; }
    std::vector<int> elements() const {
        std::vector<int> e;
        for (int x = 0; x < modulus; x += generator) e.push_back(x);
        return e;
    }
};

// Partition of [0, ground_size) into disjoint nonempty blocks.
// Canonical form: elements ascending inside blocks, blocks ordered by
// minimum element, so partition equality is structural equality.
struct IndexPartition {
    std::vector<std::vector<int>> blocks;

    IndexPartition() = default;
    explicit IndexPartition(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
        canonicalize();
    }

    static IndexPartition singletons(int ground_size);
    static IndexPartition one_block(int ground_size);

    void canonicalize();
    int ground_size() const;
    bool covers(int ground_size) const;

    // block index per element; -1 where uncovered
    std::vector<int> block_index(int ground_size) const;

    // true when every block of *this lies inside some block of coarser
    bool is_fragmentation_of(const IndexPartition& coarser) const;

    bool operator==(const IndexPartition&) const = default;
};

int gcd(int a, int b);
bool is_squarefree(int n);

// Units of Z_n in [1, n), ascending. units(1) is empty.
std::vector<int> units(int n);

// CRT splitting Z_{l1} x Z_{l2} ~ Z_n along phi(x, y) = x*l2 + y*l1,
// defined when l1*l2 = n and gcd(l1, l2) = 1.
struct CrtSplit {
    int n, l1, l2;

    CrtSplit(int n_, int l1_);

    int to_zn(int x, int y) const { return mod(x * l2 + y * l1, n); }
    std::pair<int, int> from_zn(int v) const;

    // image of Z_{l1} x {0}: the order-l1 subgroup of Z_n
    CyclicSubgroup left_subgroup() const { return {n, l2}; }
};

// Partition of Z_n into cosets of the subgroup, canonically ordered.
IndexPartition coset_partition(const CyclicSubgroup& subgroup);

}  // namespace circstab
