#include "circstab/f2.hpp"

#include <algorithm>
#include <bit>

namespace circstab {

int BitVec::lead() const {
    for (int i = 0; i < width_; ++i)
        if (get(i)) return i;
    return -1;
}

bool BitVec::dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

bool F2Basis::insert(BitVec v) {
    v = reduce(std::move(v));
    int l = v.lead();
    if (l < 0) return false;
    // keep the echelon reduced: clear this pivot from existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(l)) rows_[i] ^= v;
    rows_.push_back(std::move(v));
    leads_.push_back(l);
    return true;
}

BitVec F2Basis::reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(leads_[i])) v ^= rows_[i];
    return v;
}

std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, int width) {
    F2Basis echelon(width);
    for (const auto& r : rows) echelon.insert(r);
    std::vector<char> is_pivot(width, 0);
    for (int l : echelon.leads()) is_pivot[l] = 1;
    std::vector<BitVec> basis;
    for (int f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(width);
        v.set(f);
        // reduced echelon: pivot variable value = the free bit's coefficient
        for (std::size_t i = 0; i < echelon.rows().size(); ++i)
            if (echelon.rows()[i].get(f)) v.set(echelon.leads()[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace circstab
