#include "circstab/action_group.hpp"

#include "circstab/errors.hpp"

namespace circstab {

ActionGroup ActionGroup::generate(int degree, std::vector<Perm> generators,
                                  std::size_t element_cap) {
    ActionGroup g;
    g.degree_ = degree;
    for (const auto& p : generators) {
        if (p.degree() != degree) throw ValidationError("ActionGroup: degree mismatch");
        if (!p.is_valid()) throw ValidationError("ActionGroup: not a permutation");
    }
    g.elements_.push_back(Perm::identity(degree));
    g.index_.emplace(g.elements_[0], 0);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        Perm cur = g.elements_[head];
        for (const auto& s : generators) {
            Perm next = cur * s;
            if (g.index_.emplace(next, static_cast<int>(g.elements_.size())).second) {
                g.elements_.push_back(std::move(next));
                if (g.elements_.size() > element_cap)
                    throw BudgetExceeded("ActionGroup: element cap exceeded");
            }
        }
    }
    for (const auto& p : generators) g.gen_indices_.push_back(g.index_.at(p));
    return g;
}

int ActionGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int ActionGroup::mul(int i, int j) const { return index_.at(elements_[i] * elements_[j]); }

int ActionGroup::inv(int i) const { return index_.at(elements_[i].inverse()); }

std::vector<int> ActionGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::vector<char> seen(size(), 0);
    std::vector<int> members{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head)
        for (int s : gens) {
            int next = mul(members[head], s);
            if (!seen[next]) {
                seen[next] = 1;
                members.push_back(next);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

ActionGroup ActionGroup::subgroup(const std::vector<int>& gens) const {
    std::vector<Perm> sub_gens;
    for (int i : gens) sub_gens.push_back(elements_[i]);
    return generate(degree_, std::move(sub_gens), elements_.size() + 1);
}

}  // namespace circstab
