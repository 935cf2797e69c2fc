#include "circstab/schur.hpp"

#include <algorithm>
#include <sstream>

#include "circstab/twofold.hpp"

namespace circstab {

const std::vector<int>& SchurRing::basic_set_of(int g) const {
    for (const auto& b : basic_sets.blocks)
        if (std::find(b.begin(), b.end(), g) != b.end()) return b;
    throw ValidationError("SchurRing: element outside the ambient group");
}

SchurRing transitivity_module(const DenseGraph& sigma, const AbelianAmbient& ambient,
                              std::uint64_t node_budget) {
    if (sigma.vertex_count != ambient.size())
        throw ValidationError("transitivity_module: graph/ambient size mismatch");
    SchurRing ring;
    ring.ambient = ambient;
    auto aut = automorphisms(uncolored(sigma), node_budget);
    ring.basic_sets = stabilizer_orbits(aut, 0);
    return ring;
}

SchurRing transitivity_module(const ConnectionSet& s, std::uint64_t node_budget) {
    return transitivity_module(build_circulant(s), AbelianAmbient::cyclic(s.n), node_budget);
}

SchurRing cover_transitivity_module(const ConnectionSet& s, std::uint64_t node_budget) {
    return transitivity_module(tensor_k2(build_circulant(s)), AbelianAmbient::cover(s.n),
                               node_budget);
}

std::optional<RingViolation> verify_ring_axioms(const SchurRing& ring) {
    int size = ring.ambient.size();
    if (!ring.basic_sets.covers(size))
        throw ValidationError("verify_ring_axioms: partition must cover the group");
    const auto& blocks = ring.basic_sets.blocks;
    std::vector<int> conv(size);
    for (std::size_t xi = 0; xi < blocks.size(); ++xi)
        for (std::size_t yi = 0; yi < blocks.size(); ++yi) {
            std::fill(conv.begin(), conv.end(), 0);
            for (int x : blocks[xi])
                for (int y : blocks[yi]) ++conv[ring.ambient.add(x, y)];
            for (const auto& block : blocks) {
                int c0 = conv[block.front()];
                for (int g : block)
                    if (conv[g] != c0)
                        return RingViolation{static_cast<int>(xi), static_cast<int>(yi),
                                             block.front(), g};
            }
        }
    return std::nullopt;
}

bool inverse_closed(const SchurRing& ring) {
    for (const auto& block : ring.basic_sets.blocks) {
        std::vector<int> inv;
        inv.reserve(block.size());
        for (int g : block) inv.push_back(ring.ambient.neg(g));
        std::sort(inv.begin(), inv.end());
        if (std::find(ring.basic_sets.blocks.begin(), ring.basic_sets.blocks.end(), inv) ==
            ring.basic_sets.blocks.end())
            return false;
    }
    return true;
}

std::vector<int> radical_of(const std::vector<int>& x, const AbelianAmbient& ambient) {
    std::vector<char> member(ambient.size(), 0);
    for (int v : x) member[v] = 1;
    std::vector<int> rad;
    for (int g = 0; g < ambient.size(); ++g) {
        bool fixes = true;
        for (int v : x)
            if (!member[ambient.add(g, v)]) {
                fixes = false;
                break;
            }
        if (fixes) rad.push_back(g);
    }
    return rad;
}

DichotomyResult dichotomy_check(const ConnectionSet& s, std::uint64_t node_budget) {
    if (s.n % 2 != 0 || (s.n / 2) % 2 == 0 || s.n / 2 <= 1)
        throw ValidationError("dichotomy_check: requires n = 2m with m odd, m > 1");
    auto g = build_circulant(s);
    if (!is_connected(g) || is_bipartite(g))
        throw ValidationError("dichotomy_check: requires a connected nonbipartite circulant");
    auto verdict = classify(s, ClassifyMode::Oracle, node_budget);
    if (!verdict.unstable()) throw ValidationError("dichotomy_check: instance is stable");

    DichotomyResult r{};
    if (auto h = condition_i(s)) {
        r.branch = DichotomyBranch::ConditionIWitness;
        r.witness_h = h;
        return r;
    }
    r.basic_set_of_a = basic_set_a(g, node_budget);
    int a = cover_a_vertex(s.n);
    int m = s.n / 2;
    if (r.basic_set_of_a == std::vector<int>{a, m + a}) {
        r.branch = DichotomyBranch::BasicSetAm;
        return r;
    }
    r.branch = DichotomyBranch::Violation;
    return r;
}

std::string ring_to_json(const SchurRing& ring) {
    std::ostringstream os;
    os << "{\"order\":" << ring.ambient.size() << ",\"basic_sets\":[";
    for (std::size_t i = 0; i < ring.basic_sets.blocks.size(); ++i) {
        if (i) os << ',';
        os << '[';
        const auto& b = ring.basic_sets.blocks[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ',';
            os << b[j];
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

}  // namespace circstab
