#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace circstab {

// Dense F_2 vector of modest width (solver rows run to a few hundred bits).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int width) : width_(width), w_((width + 63) / 64, 0) {}

    int width() const { return width_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign_bit(int i, bool b) { b ? set(i) : reset(i); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    // index of the lowest set bit, or -1
    int lead() const;

    // parity of the AND with another vector
    bool dot(const BitVec& o) const;

    bool operator==(const BitVec&) const = default;

private:
    int width_ = 0;
    std::vector<std::uint64_t> w_;
};

// Reduced row echelon accumulator over F_2 (pivot = lowest set bit).
class F2Basis {
public:
    explicit F2Basis(int width) : width_(width) {}

    // reduce v against the basis; add it if nonzero. Returns true when the
    // vector was independent.
    bool insert(BitVec v);
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<int>& leads() const { return leads_; }

private:
    int width_;
    std::vector<BitVec> rows_;
    std::vector<int> leads_;
};

// Basis of {v : R v = 0} for the row list R.
std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, int width);

}  // namespace circstab
