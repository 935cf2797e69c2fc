#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circstab/zn.hpp"

namespace circstab {

// Symmetric, 0-free subset of Z_n stored as a bit mask. The defining
// datum of a circulant Cay(Z_n, S).
struct ConnectionSet {
    int n = 1;
    std::uint64_t bits = 0;

    ConnectionSet() = default;
    ConnectionSet(int n_, std::uint64_t bits_, bool validate = true);
    ConnectionSet(int n_, const std::vector<int>& members, bool validate = true);

    bool contains(int s) const { return (bits >> mod(s, n)) & 1u; }
    int size() const;
    bool empty() const { return bits == 0; }
    std::vector<int> members() const;

    ConnectionSet shifted(int h) const;    // S + h (may break symmetry; unvalidated)
    bool operator==(const ConnectionSet&) const = default;

    // text format "n:s1,s2,..." with ascending s_i
    std::string to_string() const;
    static ConnectionSet parse(const std::string& text);
    // parse just the member list against a known modulus ("s1,s2,...")
    static ConnectionSet parse_members(int n, const std::string& csv);
};

// Ordered color classes over Z_n for DiCay(Z_n, S_1, ..., S_k).
// No symmetry requirement; loops (0 in a color) are representable but the
// chain machinery is only exercised on loop-free inputs.
struct ColoredConnectionSets {
    int n = 1;
    std::vector<std::uint64_t> colors;

    ColoredConnectionSets() = default;
    ColoredConnectionSets(int n_, std::vector<std::uint64_t> colors_);

    int color_count() const { return static_cast<int>(colors.size()); }
    bool contains(int c, int s) const { return (colors[c] >> mod(s, n)) & 1u; }
    std::vector<int> members(int c) const;

    // true iff no nonzero h satisfies S_i + h = S_i for every color
    bool is_reduced() const;
    std::optional<int> common_shift() const;  // smallest such nonzero h

    bool operator==(const ColoredConnectionSets&) const = default;
};

// {l*s : s in S} for a unit l mod n.
ConnectionSet multiply_set(int l, const ConnectionSet& s);
std::uint64_t multiply_mask(int l, int n, std::uint64_t mask);

// Smallest nonzero h with S + h = S, if any (the circulant twin witness).
std::optional<int> circulant_reduced_shift(const ConnectionSet& s);

// Largest subgroup of shifts fixing S setwise. radical(empty) = Z_n.
CyclicSubgroup radical(const ConnectionSet& s);
CyclicSubgroup radical(const ColoredConnectionSets& cs);

// Split into reflective part (s with s+m in S) and anti-reflective rest.
// Requires n even.
struct ReflectiveSplit {
    ConnectionSet reflective;
    ConnectionSet anti_reflective;
};
ReflectiveSplit reflective_split(const ConnectionSet& s);

// Two-colored quotient over the cosets of L = {0, m}: reflective color from
// S_r, anti-reflective color where {d, d+m} meets S_a. Requires n even.
ColoredConnectionSets quotient_colored(const ConnectionSet& s);

}  // namespace circstab
