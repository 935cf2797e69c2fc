#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

namespace circstab {

// Fixed 128-bit set. Vertex counts are capped at 128 (two machine words)
// so adjacency rows and neighborhood comparisons stay branch-free.
struct BitSet128 {
    std::array<std::uint64_t, 2> w{0, 0};

    static BitSet128 empty() { return {}; }

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool any() const { return (w[0] | w[1]) != 0; }
    bool none() const { return !any(); }

    BitSet128 operator&(const BitSet128& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    BitSet128 operator|(const BitSet128& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    BitSet128 operator^(const BitSet128& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
    BitSet128& operator|=(const BitSet128& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
    BitSet128& operator&=(const BitSet128& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
    BitSet128& operator^=(const BitSet128& o) { w[0] ^= o.w[0]; w[1] ^= o.w[1]; return *this; }

    bool operator==(const BitSet128&) const = default;

    int count_and(const BitSet128& o) const {
        return std::popcount(w[0] & o.w[0]) + std::popcount(w[1] & o.w[1]);
    }

    // Visit set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (int half = 0; half < 2; ++half) {
            std::uint64_t x = w[half];
            while (x) {
                f(64 * half + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

}  // namespace circstab

template <>
struct std::hash<circstab::BitSet128> {
    std::size_t operator()(const circstab::BitSet128& b) const noexcept {
        std::uint64_t h = b.w[0] * 0x9e3779b97f4a7c15ull;
        h ^= b.w[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
