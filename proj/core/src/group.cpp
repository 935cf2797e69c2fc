#include "circstab/group.hpp"

#include <algorithm>

namespace circstab {

GeneratedGroup GeneratedGroup::from_generators(int degree, std::vector<Perm> generators,
                                               std::vector<int> base_hint) {
    GeneratedGroup g;
    g.degree_ = degree;
    g.base_hint_ = base_hint;
    for (auto& p : generators) {
        if (p.degree() != degree) throw ValidationError("GeneratedGroup: degree mismatch");
        if (!p.is_valid()) throw ValidationError("GeneratedGroup: not a permutation");
    }
    g.input_gens_ = generators;
    for (int b : base_hint) {
        if (b < 0 || b >= degree) throw ValidationError("GeneratedGroup: base hint out of range");
        Level lv;
        lv.base_point = b;
        g.base_.push_back(b);
        g.levels_.push_back(std::move(lv));
    }
    for (auto& p : generators)
        if (!p.is_identity()) g.place(std::move(p), 0);
    g.schreier_sims();
    return g;
}

int GeneratedGroup::pick_base_point(const Perm& moved_by) const {
    auto in_base = [&](int x) { return std::find(base_.begin(), base_.end(), x) != base_.end(); };
    for (int x : base_hint_)
        if (!in_base(x) && moved_by(x) != x) return x;
    for (int x = 0; x < degree_; ++x)
        if (!in_base(x) && moved_by(x) != x) return x;
    throw ValidationError("GeneratedGroup: no base point for non-identity element");
}

// Assign g to the first level at or below `from` whose base point it
// moves, extending the base when it fixes every existing base point.
int GeneratedGroup::place(Perm g, std::size_t from) {
    for (std::size_t li = from; li < levels_.size(); ++li)
        if (g(levels_[li].base_point) != levels_[li].base_point) {
            levels_[li].gens.push_back(std::move(g));
            return static_cast<int>(li);
        }
    Level lv;
    lv.base_point = pick_base_point(g);
    base_.push_back(lv.base_point);
    lv.gens.push_back(std::move(g));
    levels_.push_back(std::move(lv));
    return static_cast<int>(levels_.size() - 1);
}

void GeneratedGroup::rebuild_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.clear();
    lv.transversal.assign(degree_, Perm{});
    lv.orbit.push_back(lv.base_point);
    lv.transversal[lv.base_point] = Perm::identity(degree_);
    // the orbit at level li uses every strong generator fixing the base
    // points above it, i.e. the gens stored at levels >= li
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        int x = lv.orbit[i];
        for (std::size_t lj = li; lj < levels_.size(); ++lj)
            for (const Perm& s : levels_[lj].gens) {
                int y = s(x);
                if (lv.transversal[y].degree() == 0) {
                    lv.transversal[y] = s * lv.transversal[x];
                    lv.orbit.push_back(y);
                }
            }
    }
}

// Reduce g through levels >= from; returns the residue (identity iff g is
// certified by the deeper part of the chain).
Perm GeneratedGroup::sift_from(Perm g, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
        const Level& lv = levels_[li];
        int x = g(lv.base_point);
        if (x == lv.base_point) continue;
        if (lv.transversal.size() != static_cast<std::size_t>(degree_) ||
            lv.transversal[x].degree() == 0)
            return g;  // moves the base outside the current orbit
        g = lv.transversal[x].inverse() * g;
    }
    return g;
}

// Bottom-up verification: a level is complete when each of its Schreier
// generators sifts to the identity through the deeper levels. Adding a
// residue re-opens verification from its level upward.
void GeneratedGroup::schreier_sims() {
    if (levels_.empty()) return;
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        rebuild_orbit(i);
        const Level& lv = levels_[i];
        bool reopened = false;
        for (std::size_t oi = 0; oi < lv.orbit.size() && !reopened; ++oi) {
            int pt = lv.orbit[oi];
            for (std::size_t lj = i; lj < levels_.size() && !reopened; ++lj)
                for (const Perm& s : levels_[lj].gens) {
                    Perm schreier = lv.transversal[s(pt)].inverse() * s * lv.transversal[pt];
                    Perm residue = sift_from(std::move(schreier), i + 1);
                    if (!residue.is_identity()) {
                        i = place(std::move(residue), i + 1);
                        reopened = true;
                        break;
                    }
                }
        }
        if (!reopened) --i;
    }
}

BigInt GeneratedGroup::order() const {
    BigInt n = 1;
    for (const auto& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
    return n;
}

bool GeneratedGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    return sift_from(p, 0).is_identity();
}

std::vector<Perm> GeneratedGroup::level_generators(int level) const {
    std::vector<Perm> out;
    for (std::size_t li = level; li < levels_.size(); ++li)
        for (const auto& g : levels_[li].gens) out.push_back(g);
    return out;
}

IndexPartition GeneratedGroup::orbits() const {
    std::vector<int> parent(degree_);
    for (int i = 0; i < degree_; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : input_gens_)
        for (int x = 0; x < degree_; ++x) {
            int a = find(x), b = find(g(x));
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int>> blocks(degree_);
    for (int x = 0; x < degree_; ++x) blocks[find(x)].push_back(x);
    IndexPartition p;
    for (auto& b : blocks)
        if (!b.empty()) p.blocks.push_back(std::move(b));
    p.canonicalize();
    return p;
}

bool GeneratedGroup::is_transitive() const {
    return degree_ > 0 && orbits().blocks.size() == 1;
}

void GeneratedGroup::for_each_element(const std::function<bool(const Perm&)>& f,
                                      std::uint64_t cap) const {
    if (order() > cap) throw BudgetExceeded("GeneratedGroup: element walk exceeds cap");
    std::function<bool(std::size_t, const Perm&)> walk = [&](std::size_t li,
                                                             const Perm& prefix) -> bool {
        if (li == levels_.size()) return f(prefix);
        for (int pt : levels_[li].orbit)
            if (!walk(li + 1, prefix * levels_[li].transversal[pt])) return false;
        return true;
    };
    walk(0, Perm::identity(degree_));
}

std::vector<Perm> GeneratedGroup::elements(std::uint64_t cap) const {
    std::vector<Perm> out;
    for_each_element(
        [&](const Perm& p) {
            out.push_back(p);
            return true;
        },
        cap);
    return out;
}

Perm GeneratedGroup::random_element(std::mt19937_64& rng) const {
    Perm g = Perm::identity(degree_);
    for (const auto& lv : levels_) {
        std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
        g = g * lv.transversal[lv.orbit[pick(rng)]];
    }
    return g;
}

IndexPartition stabilizer_orbits(const GeneratedGroup& g, int basepoint) {
    if (basepoint < 0 || basepoint >= g.degree())
        throw ValidationError("stabilizer_orbits: basepoint out of range");
    auto rebased = GeneratedGroup::from_generators(g.degree(), g.generators(), {basepoint});
    auto stab = GeneratedGroup::from_generators(g.degree(), rebased.level_generators(1));
    return stab.orbits();
}

}  // namespace circstab
