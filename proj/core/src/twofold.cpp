#include "circstab/twofold.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace circstab {

bool TwoFoldPair::is_two_fold_automorphism(const DenseGraph& base) const {
    int n = base.vertex_count;
    for (int w = 0; w < n; ++w) {
        BitSet128 mapped;
        base.adj[w].for_each([&](int v) { mapped.set(sigma1(v)); });
        if (!(mapped == base.adj[sigma2(w)])) return false;
    }
    return true;
}

TwoFoldGroup tf_group(const DenseGraph& gamma, std::uint64_t node_budget) {
    if (!is_connected(gamma))
        throw ValidationError("tf_group: disconnected input, classify it as trivially unstable");
    if (is_bipartite(gamma))
        throw ValidationError("tf_group: bipartite input, classify it as trivially unstable");
    TwoFoldGroup tf;
    tf.base = gamma;
    tf.cover = tensor_k2(gamma);
    // the layer coloring restricts the search to the layer-preserving part
    tf.group = automorphisms(tf.cover, node_budget);
    int n = gamma.vertex_count;
    for (const auto& g : tf.group.generators()) {
        TwoFoldPair pair;
        std::vector<std::uint8_t> s1(n), s2(n);
        for (int v = 0; v < n; ++v) {
            s1[v] = static_cast<std::uint8_t>(g(v));
            s2[v] = static_cast<std::uint8_t>(g(v + n) - n);
        }
        pair.sigma1 = Perm(std::move(s1));
        pair.sigma2 = Perm(std::move(s2));
        tf.generator_pairs.push_back(std::move(pair));
    }
    return tf;
}

std::optional<TwoFoldPair> unexpected_symmetry_witness(const DenseGraph& gamma,
                                                       std::uint64_t node_budget) {
    auto tf = tf_group(gamma, node_budget);
    // a diagonal generator set generates a diagonal group
    for (const auto& p : tf.generator_pairs)
        if (!(p.sigma1 == p.sigma2)) return p;
    return std::nullopt;
}

GeneratedGroup TwoFoldGroup::projections() const {
    std::vector<Perm> gens;
    for (const auto& p : generator_pairs) gens.push_back(p.sigma1);
    return GeneratedGroup::from_generators(base.vertex_count, std::move(gens));
}

std::optional<Perm> try_gamma_partner(const DenseGraph& gamma, const Perm& sigma) {
    int n = gamma.vertex_count;
    std::unordered_map<BitSet128, int> vertex_by_neighborhood;
    for (int v = 0; v < n; ++v)
        if (!vertex_by_neighborhood.emplace(gamma.adj[v], v).second)
            throw ValidationError("gamma: graph must be reduced");
    std::vector<std::uint8_t> partner(n);
    for (int w = 0; w < n; ++w) {
        BitSet128 target;
        gamma.adj[w].for_each([&](int v) { target.set(sigma(v)); });
        auto it = vertex_by_neighborhood.find(target);
        if (it == vertex_by_neighborhood.end()) return std::nullopt;
        partner[w] = static_cast<std::uint8_t>(it->second);
    }
    return Perm(std::move(partner));
}

Perm gamma_partner(const DenseGraph& gamma, const Perm& sigma) {
    auto p = try_gamma_partner(gamma, sigma);
    if (!p) throw ValidationError("gamma: sigma has no two-fold partner (not in Aut^pi)");
    return *p;
}

AlphaValue alpha_of(const DenseGraph& gamma, const Perm& sigma) {
    AlphaValue a;
    a.value = sigma.inverse() * gamma_partner(gamma, sigma);
    int n = gamma.vertex_count;
    if (n % 2 != 0) return a;
    int m = n / 2;
    a.in_flip_family = true;
    for (int x = 0; x < n && a.in_flip_family; ++x) {
        int y = a.value(x);
        if (y != x && y != mod(x + m, n)) a.in_flip_family = false;
    }
    if (!a.in_flip_family) return a;
    for (int c = 0; c < m; ++c) {
        bool low = a.value(c) != c;
        bool high = a.value(c + m) != c + m;
        if (low != high) {
            a.in_flip_family = false;  // not constant on the L-coset
            a.displacement = 0;
            return a;
        }
        if (low) a.displacement |= std::uint64_t{1} << c;
    }
    return a;
}

std::vector<int> basic_set_a(const DenseGraph& gamma, std::uint64_t node_budget) {
    if (!is_connected(gamma) || is_bipartite(gamma))
        throw ValidationError("basic_set_a: input must be connected and non-bipartite");
    auto cover = uncolored(tensor_k2(gamma));
    auto aut = automorphisms(cover, node_budget);
    auto orbits = stabilizer_orbits(aut, 0);
    int a = cover_a_vertex(gamma.vertex_count);
    for (const auto& b : orbits.blocks)
        if (std::find(b.begin(), b.end(), a) != b.end()) return b;
    throw ValidationError("basic_set_a: orbit of a not found");
}

std::optional<int> condition_i(const ConnectionSet& s) {
    if (s.n % 2 != 0) throw ValidationError("condition_i: n must be even");
    std::uint64_t even_part = 0;
    for (int x = 0; x < s.n; x += 2)
        if (s.contains(x)) even_part |= std::uint64_t{1} << x;
    if (even_part == 0) return std::nullopt;
    for (int h = 2; h < s.n; h += 2) {
        std::uint64_t shifted = 0;
        for (int x = 0; x < s.n; x += 2)
            if ((even_part >> x) & 1u) shifted |= std::uint64_t{1} << mod(x + h, s.n);
        if (shifted == even_part) return h;
    }
    return std::nullopt;
}

std::optional<int> condition_ii(const ConnectionSet& s) {
    if (s.n % 2 != 0) throw ValidationError("condition_ii: n must be even");
    int m = s.n / 2;
    std::uint64_t target = s.shifted(m).bits;
    for (int l : units(s.n))
        if (multiply_mask(l, s.n, s.bits) == target) return l;
    return std::nullopt;
}

std::string to_string(StabilityStatus s) {
    switch (s) {
        case StabilityStatus::Stable: return "stable";
        case StabilityStatus::TriviallyUnstable: return "trivially-unstable";
        case StabilityStatus::NontriviallyUnstable: return "nontrivially-unstable";
    }
    return "?";
}

std::string to_string(StabilityReason r) {
    switch (r) {
        case StabilityReason::None: return "none";
        case StabilityReason::Disconnected: return "disconnected";
        case StabilityReason::Bipartite: return "bipartite";
        case StabilityReason::NonReduced: return "non-reduced";
        case StabilityReason::ConditionI: return "condition-i";
        case StabilityReason::ConditionII: return "condition-ii";
        case StabilityReason::OracleUnexpectedSymmetry: return "oracle-unexpected-symmetry";
    }
    return "?";
}

std::string verdict_to_json(const ConnectionSet& s, const StabilityVerdict& v) {
    std::string out = "{\"n\":" + std::to_string(s.n);
    out += ",\"set\":\"" + s.to_string() + "\"";
    out += ",\"status\":\"" + to_string(v.status) + "\"";
    out += ",\"reason\":\"" + to_string(v.reason) + "\"";
    out += ",\"witness\":";
    out += v.witness ? std::to_string(*v.witness) : "null";
    // orders are null until an oracle run fills them in
    out += ",\"aut_order\":";
    out += v.aut_order == 0 ? "null" : "\"" + v.aut_order.str() + "\"";
    out += ",\"cover_aut_order\":";
    out += v.cover_aut_order == 0 ? "null" : "\"" + v.cover_aut_order.str() + "\"";
    out += "}";
    return out;
}

namespace {

StabilityVerdict classify_criteria(const ConnectionSet& s) {
    StabilityVerdict v;
    auto g = build_circulant(s);
    if (s.empty() || !is_connected(g)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::Disconnected;
        return v;
    }
    if (is_bipartite(g)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::Bipartite;
        return v;
    }
    if (auto h = circulant_reduced_shift(s)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::NonReduced;
        v.witness = h;
        return v;
    }
    if (s.n % 2 == 0) {
        if (auto h = condition_i(s)) {
            v.status = StabilityStatus::NontriviallyUnstable;
            v.reason = StabilityReason::ConditionI;
            v.witness = h;
            return v;
        }
        if (auto l = condition_ii(s)) {
            v.status = StabilityStatus::NontriviallyUnstable;
            v.reason = StabilityReason::ConditionII;
            v.witness = l;
            return v;
        }
    }
    v.status = StabilityStatus::Stable;
    return v;
}

StabilityVerdict classify_oracle(const ConnectionSet& s, std::uint64_t node_budget) {
    StabilityVerdict v;
    auto g = build_circulant(s);
    v.aut_order = automorphisms(g, node_budget).order();
    v.cover_aut_order = automorphisms(uncolored(tensor_k2(g)), node_budget).order();
    bool stable = v.cover_aut_order == 2 * v.aut_order;
    if (stable) {
        v.status = StabilityStatus::Stable;
        return v;
    }
    if (s.empty() || !is_connected(g)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::Disconnected;
    } else if (is_bipartite(g)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::Bipartite;
    } else if (auto h = circulant_reduced_shift(s)) {
        v.status = StabilityStatus::TriviallyUnstable;
        v.reason = StabilityReason::NonReduced;
        v.witness = h;
    } else {
        v.status = StabilityStatus::NontriviallyUnstable;
        v.reason = StabilityReason::OracleUnexpectedSymmetry;
    }
    return v;
}

}  // namespace

StabilityVerdict classify(const ConnectionSet& s, ClassifyMode mode, std::uint64_t node_budget) {
    switch (mode) {
        case ClassifyMode::Criteria:
            return classify_criteria(s);
        case ClassifyMode::Oracle:
            return classify_oracle(s, node_budget);
        case ClassifyMode::CrossCheck: {
            auto crit = classify_criteria(s);
            auto orac = classify_oracle(s, node_budget);
            if (crit.status != orac.status)
                throw FalsificationError(
                    "classify cross-check disagreement on " + s.to_string() + ": criteria=" +
                    to_string(crit.status) + "/" + to_string(crit.reason) +
                    " oracle=" + to_string(orac.status) + "/" + to_string(orac.reason) +
                    " |Aut|=" + orac.aut_order.str() +
                    " |Aut(cover)|=" + orac.cover_aut_order.str());
            crit.aut_order = orac.aut_order;
            crit.cover_aut_order = orac.cover_aut_order;
            return crit;
        }
    }
    throw ValidationError("classify: bad mode");
}

IndexPartition DisplacementClosure::coset_classes() const {
    // L-cosets are equivalent when their displacement bits agree across
    // every closure element.
    std::vector<std::vector<char>> column(m, std::vector<char>(elements.size(), 0));
    for (std::size_t e = 0; e < elements.size(); ++e)
        for (int c = 0; c < m; ++c) column[c][e] = (elements[e].displacement >> c) & 1u;
    IndexPartition p;
    std::vector<char> used(m, 0);
    for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        std::vector<int> block{c};
        used[c] = 1;
        for (int d = c + 1; d < m; ++d)
            if (!used[d] && column[c] == column[d]) {
                block.push_back(d);
                used[d] = 1;
            }
        p.blocks.push_back(std::move(block));
    }
    p.canonicalize();
    return p;
}

DisplacementClosure displacement_closure(const TwoFoldGroup& tf, std::size_t state_cap) {
    int n = tf.base.vertex_count;
    if (n % 2 != 0) throw ValidationError("displacement_closure: n must be even");
    int m = n / 2;

    auto project = [&](const Perm& sigma) -> DisplacementElement {
        for (int x = 0; x < m; ++x)
            if (mod(sigma(x), m) != mod(sigma(x + m), m))
                throw ValidationError("displacement_closure: L-cosets not a block system");
        std::vector<std::uint8_t> img(m);
        for (int x = 0; x < m; ++x) img[x] = static_cast<std::uint8_t>(mod(sigma(x), m));
        auto a = alpha_of(tf.base, sigma);
        if (!a.in_flip_family)
            throw ValidationError("displacement_closure: alpha outside the flip family");
        return {Perm(std::move(img)), a.displacement};
    };

    auto compose = [m](const DisplacementElement& s, const DisplacementElement& t) {
        // d_{st}(x) = d_t(x) + d_s(t.x)
        DisplacementElement r;
        r.block_perm = s.block_perm * t.block_perm;
        r.displacement = t.displacement;
        for (int x = 0; x < m; ++x)
            if ((s.displacement >> t.block_perm(x)) & 1u) r.displacement ^= std::uint64_t{1} << x;
        return r;
    };

    DisplacementClosure closure;
    closure.m = m;
    std::vector<DisplacementElement> gens;
    DisplacementElement identity{Perm::identity(m), 0};
    for (const auto& pair : tf.generator_pairs) gens.push_back(project(pair.sigma1));

    struct ElementHash {
        std::size_t operator()(const DisplacementElement& e) const noexcept {
            return std::hash<Perm>{}(e.block_perm) * 31 ^ std::hash<std::uint64_t>{}(e.displacement);
        }
    };
    std::unordered_set<DisplacementElement, ElementHash> seen;
    std::vector<DisplacementElement> queue{identity};
    seen.insert(identity);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto cur = queue[head];
        for (const auto& g : gens) {
            auto next = compose(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > state_cap)
                    throw BudgetExceeded("displacement closure: state cap exceeded, B not computed");
                queue.push_back(std::move(next));
            }
        }
    }
    closure.elements.assign(queue.begin(), queue.end());
    return closure;
}

bool alpha_homogeneous(const DisplacementClosure& closure, const IndexPartition& p) {
    for (const auto& e : closure.elements)
        for (const auto& block : p.blocks) {
            bool first = (e.displacement >> (block.front() % closure.m)) & 1u;
            for (int v : block)
                if (static_cast<bool>((e.displacement >> (v % closure.m)) & 1u) != first)
                    return false;
        }
    return true;
}

PartitionsLCB partitions_lcb(const ConnectionSet& s, const TwoFoldGroup& tf,
                             std::size_t state_cap) {
    if (s.n % 2 != 0) throw ValidationError("partitions_lcb: n must be even");
    int n = s.n, m = n / 2;
    PartitionsLCB out;
    out.l_cosets = coset_partition(CyclicSubgroup(n, m));

    // C = L<S_a>: subgroup generated by m together with the anti-reflective part
    auto split = reflective_split(s);
    int d = gcd(n, m);
    for (int x : split.anti_reflective.members()) d = gcd(d, x);
    out.c_subgroup = CyclicSubgroup(n, d);
    out.c_cosets = coset_partition(out.c_subgroup);

    auto closure = displacement_closure(tf, state_cap);
    auto classes = closure.coset_classes();
    IndexPartition b;
    for (const auto& cls : classes.blocks) {
        std::vector<int> block;
        for (int c : cls) {
            block.push_back(c);
            block.push_back(c + m);
        }
        b.blocks.push_back(std::move(block));
    }
    b.canonicalize();
    out.b_partition = b;

    // the block containing 0 must be a subgroup (the B lemma says cosets)
    const auto& zero_block = out.b_partition.blocks.front();
    int bd = n;
    for (int v : zero_block)
        if (v != 0) bd = gcd(bd, v);
    bool subgroup = static_cast<int>(zero_block.size()) == n / bd;
    for (int v : zero_block)
        if (v % bd != 0) subgroup = false;
    if (!subgroup) throw FalsificationError("partitions_lcb: B block of 0 is not a subgroup");
    out.b_subgroup = CyclicSubgroup(n, bd);
    return out;
}

bool local_alpha_check(const DenseGraph& gamma, const std::vector<int>& c_coset,
                       const Perm& sigma1, const Perm& sigma2) {
    for (int v : c_coset)
        if (sigma1(v) != sigma2(v))
            throw ValidationError("local_alpha_check: sigma1 and sigma2 must agree on the coset");
    auto a1 = alpha_of(gamma, sigma1);
    auto a2 = alpha_of(gamma, sigma2);
    for (int v : c_coset)
        if (a1.value(v) != a2.value(v)) return false;
    return true;
}

}  // namespace circstab
