#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "circstab/errors.hpp"

namespace circstab {

// Permutation of [0, degree) stored as an image array.
// Composition follows function application: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {}
    Perm(std::initializer_list<int> images) {
        img_.reserve(images.size());
        for (int v : images) img_.push_back(static_cast<std::uint8_t>(v));
    }

    static Perm identity(int degree) {
        std::vector<std::uint8_t> v(degree);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        return Perm(std::move(v));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    std::uint8_t& operator[](int x) { return img_[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool is_valid() const {
        std::vector<char> seen(img_.size(), 0);
        for (std::uint8_t v : img_) {
            if (v >= img_.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    Perm inverse() const {
        std::vector<std::uint8_t> inv(img_.size());
        for (int i = 0; i < degree(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
        return Perm(std::move(inv));
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<std::uint8_t> r(b.img_.size());
        for (int i = 0; i < b.degree(); ++i) r[i] = a.img_[b.img_[i]];
        return Perm(std::move(r));
    }

    // iota(c)(p) = c * p * c^{-1}
    Perm conjugated_by(const Perm& c) const { return c * (*this) * c.inverse(); }

    int order() const {
        Perm p = *this;
        int k = 1;
        while (!p.is_identity()) {
            p = p * (*this);
            ++k;
            if (k > 1 << 24) throw BudgetExceeded("permutation order runaway");
        }
        return k;
    }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    const std::vector<std::uint8_t>& images() const { return img_; }

private:
    std::vector<std::uint8_t> img_;
};

}  // namespace circstab

template <>
struct std::hash<circstab::Perm> {
    std::size_t operator()(const circstab::Perm& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
