#include "circstab/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "circstab/blocks.hpp"
#include "circstab/errors.hpp"
#include "circstab/group.hpp"
#include "circstab/zn.hpp"

namespace circstab {

namespace {

// action matrix rows: rows[r] is the input mask contributing to output bit r
std::vector<ModuleVec> action_matrix(const CocycleProblem& p, int element) {
    std::vector<ModuleVec> rows(p.dim, 0);
    for (int j = 0; j < p.dim; ++j) {
        ModuleVec img = p.act(element, ModuleVec{1} << j);
        for (int r = 0; r < p.dim; ++r)
            if ((img >> r) & 1u) rows[r] |= ModuleVec{1} << j;
    }
    return rows;
}

ModuleVec permute_vec(const Perm& perm, ModuleVec v) {
    ModuleVec out = 0;
    while (v) {
        int x = std::countr_zero(v);
        v &= v - 1;
        out |= ModuleVec{1} << perm(x);
    }
    return out;
}

}  // namespace

CocycleSpace::CocycleSpace(CocycleProblem problem)
    : problem_(std::move(problem)),
      coord_width_(static_cast<int>(problem_.gens.size()) * problem_.dim),
      b_basis_(coord_width_) {
    const int t = static_cast<int>(problem_.gens.size());
    const int dim = problem_.dim;
    const int W = coord_width_;
    if (dim > 64) throw ValidationError("CocycleSpace: module dimension above 64");

    std::vector<std::vector<ModuleVec>> gen_act(t);
    for (int i = 0; i < t; ++i) gen_act[i] = action_matrix(problem_, problem_.gens[i]);

    // Unknowns u: the stacked generator values. A spanning tree of the
    // left-multiplication Cayley graph expresses omega(x) as expr_[x] * u;
    // each non-tree edge contributes dim linear constraints.
    expr_.assign(problem_.group_size, {});
    std::vector<int> order;
    expr_[0].assign(dim, BitVec(W));
    order.push_back(0);
    std::vector<BitVec> constraints;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int x = order[head];
        for (int i = 0; i < t; ++i) {
            int y = problem_.mul(problem_.gens[i], x);
            // omega(g_i x) = g_i . omega(x) + omega(g_i)
            std::vector<BitVec> rows(dim, BitVec(W));
            for (int r = 0; r < dim; ++r) {
                ModuleVec mask = gen_act[i][r];
                while (mask) {
                    int s = std::countr_zero(mask);
                    mask &= mask - 1;
                    rows[r] ^= expr_[x][s];
                }
                rows[r].assign_bit(i * dim + r, !rows[r].get(i * dim + r));
            }
            if (expr_[y].empty()) {
                expr_[y] = std::move(rows);
                order.push_back(y);
            } else {
                for (int r = 0; r < dim; ++r) {
                    rows[r] ^= expr_[y][r];
                    if (!rows[r].zero()) constraints.push_back(std::move(rows[r]));
                }
            }
        }
    }
    if (static_cast<int>(order.size()) != problem_.group_size)
        throw ValidationError("CocycleSpace: generators do not generate the group");

    for (const auto& u : nullspace(constraints, W)) z_basis_.push_back(expand(u));

    // coboundaries e_j -> (g_i . e_j + e_j), in the same coordinates
    for (int j = 0; j < dim; ++j) {
        BitVec coords(W);
        for (int i = 0; i < t; ++i) {
            ModuleVec delta =
                problem_.act(problem_.gens[i], ModuleVec{1} << j) ^ (ModuleVec{1} << j);
            for (int r = 0; r < dim; ++r)
                if ((delta >> r) & 1u) coords.set(i * dim + r);
        }
        b_basis_.insert(std::move(coords));
    }
}

Cocycle CocycleSpace::expand(const BitVec& u) const {
    Cocycle c;
    c.table.assign(problem_.group_size, 0);
    for (int x = 0; x < problem_.group_size; ++x)
        for (int r = 0; r < problem_.dim; ++r)
            if (expr_[x][r].dot(u)) c.table[x] |= ModuleVec{1} << r;
    return c;
}

BitVec CocycleSpace::coords_of(const Cocycle& c) const {
    BitVec coords(coord_width_);
    for (std::size_t i = 0; i < problem_.gens.size(); ++i) {
        ModuleVec v = c.table[problem_.gens[i]];
        for (int r = 0; r < problem_.dim; ++r)
            if ((v >> r) & 1u) coords.set(static_cast<int>(i) * problem_.dim + r);
    }
    return coords;
}

std::vector<Cocycle> CocycleSpace::h1_class_reps() const {
    F2Basis span(coord_width_);
    for (const auto& row : b_basis_.rows()) span.insert(BitVec(row));
    std::vector<Cocycle> reps;
    for (const auto& z : z_basis_)
        if (span.insert(coords_of(z))) reps.push_back(z);
    return reps;
}

bool CocycleSpace::verify_identity(const Cocycle& c, int sample_pairs, std::uint64_t seed) const {
    auto check = [&](int g, int h) {
        ModuleVec lhs = c.table[problem_.mul(g, h)];
        ModuleVec rhs = problem_.act(g, c.table[h]) ^ c.table[g];
        return lhs == rhs;
    };
    if (sample_pairs <= 0) {
        for (int g = 0; g < problem_.group_size; ++g)
            for (int h = 0; h < problem_.group_size; ++h)
                if (!check(g, h)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_pairs; ++i)
        if (!check(static_cast<int>(rng() % problem_.group_size),
                   static_cast<int>(rng() % problem_.group_size)))
            return false;
    return true;
}

CocycleProblem permutation_module_problem(const ActionGroup& g) {
    if (g.degree() > 64) throw ValidationError("permutation module: degree above 64");
    CocycleProblem p;
    p.group_size = g.size();
    p.gens = g.generator_indices();
    p.mul = [&g](int i, int j) { return g.mul(i, j); };
    p.dim = g.degree();
    p.act = [&g](int e, ModuleVec v) { return permute_vec(g.element(e), v); };
    return p;
}

CocycleSpace cocycle_space(const ActionGroup& g) {
    return CocycleSpace(permutation_module_problem(g));
}

int h1_dimension(const ActionGroup& g) { return cocycle_space(g).h1_dim(); }

int b1_dimension(const ActionGroup& g) { return cocycle_space(g).b_dim(); }

Cocycle restrict_cocycle(const Cocycle& omega, const ActionGroup& g, const ActionGroup& h) {
    Cocycle out;
    out.table.resize(h.size());
    for (int i = 0; i < h.size(); ++i) {
        int gi = g.index_of(h.element(i));
        if (gi < 0) throw ValidationError("restrict_cocycle: h is not a subgroup of g");
        out.table[i] = omega.table[gi];
    }
    return out;
}

Cocycle corestrict_cocycle(const Cocycle& omega_h, const ActionGroup& g, const ActionGroup& h) {
    std::vector<int> h_in_g;
    for (int i = 0; i < h.size(); ++i) {
        int gi = g.index_of(h.element(i));
        if (gi < 0) throw ValidationError("corestrict_cocycle: h is not a subgroup of g");
        h_in_g.push_back(gi);
    }
    std::vector<int> h_index_of(g.size(), -1);
    for (int i = 0; i < h.size(); ++i) h_index_of[h_in_g[i]] = i;

    // minimal-index representatives of the left cosets xH
    std::vector<int> rep_of(g.size(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.size(); ++x) {
        if (rep_of[x] >= 0) continue;
        reps.push_back(x);
        for (int hi : h_in_g) rep_of[g.mul(x, hi)] = x;
    }

    Cocycle out;
    out.table.assign(g.size(), 0);
    for (int e = 0; e < g.size(); ++e) {
        ModuleVec sum = 0;
        for (int r : reps) {
            int t = g.mul(e, r);
            int c = rep_of[t];
            int h_part = h_index_of[g.mul(g.inv(c), t)];
            if (h_part < 0) throw ValidationError("corestrict_cocycle: coset bookkeeping broken");
            sum ^= permute_vec(g.element(c), omega_h.table[h_part]);
        }
        out.table[e] = sum;
    }
    return out;
}

Quotient build_quotient(const ActionGroup& g, const ActionGroup& k) {
    std::vector<int> k_in_g;
    for (int i = 0; i < k.size(); ++i) {
        int gi = g.index_of(k.element(i));
        if (gi < 0) throw ValidationError("build_quotient: k is not a subgroup of g");
        k_in_g.push_back(gi);
    }
    for (int gen : g.generator_indices())
        for (int ki : k_in_g) {
            int conj = g.mul(g.mul(gen, ki), g.inv(gen));
            if (std::find(k_in_g.begin(), k_in_g.end(), conj) == k_in_g.end())
                throw ValidationError("build_quotient: k is not normal in g");
        }

    Quotient q;
    q.coset_of.assign(g.size(), -1);
    for (int x = 0; x < g.size(); ++x) {
        if (q.coset_of[x] >= 0) continue;
        int id = static_cast<int>(q.reps.size());
        q.reps.push_back(x);
        for (int ki : k_in_g) q.coset_of[g.mul(x, ki)] = id;
    }
    q.size = static_cast<int>(q.reps.size());
    for (int gen : g.generator_indices()) q.gen_cosets.push_back(q.coset_of[gen]);

    // M^K as the mutual fixed space of the subgroup action
    std::vector<BitVec> rows;
    int dim = g.degree();
    for (int ki : k_in_g) {
        const Perm& perm = g.element(ki);
        Perm inv = perm.inverse();
        for (int r = 0; r < dim; ++r) {
            int pre = inv(r);
            if (pre == r) continue;
            BitVec row(dim);
            row.set(pre);
            row.set(r);
            rows.push_back(std::move(row));
        }
    }
    for (const auto& v : nullspace(rows, dim)) {
        ModuleVec packed = 0;
        for (int i = 0; i < dim; ++i)
            if (v.get(i)) packed |= ModuleVec{1} << i;
        q.fixed_basis.push_back(packed);
    }
    return q;
}

namespace {
// coordinates of an ambient vector in a given independent basis
ModuleVec coords_in_basis(const std::vector<ModuleVec>& basis, ModuleVec ambient) {
    int k = static_cast<int>(basis.size());
    std::vector<ModuleVec> col(basis);
    std::vector<ModuleVec> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = ModuleVec{1} << i;
    ModuleVec result = 0, remaining = ambient;
    for (int i = 0; i < k; ++i) {
        // pivot: remaining column with the lowest set bit
        int best = -1, best_lead = 65;
        for (int j = i; j < k; ++j) {
            if (!col[j]) continue;
            int l = std::countr_zero(col[j]);
            if (l < best_lead) {
                best_lead = l;
                best = j;
            }
        }
        if (best < 0) break;
        std::swap(col[i], col[best]);
        std::swap(combo[i], combo[best]);
        for (int j = 0; j < k; ++j)
            if (j != i && ((col[j] >> best_lead) & 1u)) {
                col[j] ^= col[i];
                combo[j] ^= combo[i];
            }
        if ((remaining >> best_lead) & 1u) {
            remaining ^= col[i];
            result ^= combo[i];
        }
    }
    if (remaining) throw ValidationError("coords_in_basis: vector outside the span");
    return result;
}
}  // namespace

CocycleSpace quotient_cocycle_space(const ActionGroup& g, const Quotient& q) {
    int k = static_cast<int>(q.fixed_basis.size());
    CocycleProblem p;
    p.group_size = q.size;
    for (int c : q.gen_cosets)
        if (std::find(p.gens.begin(), p.gens.end(), c) == p.gens.end() && c != q.coset_of[0])
            p.gens.push_back(c);
    if (p.gens.empty()) p.gens.push_back(q.coset_of[0]);  // trivial quotient
    Quotient qc = q;  // captured by value: the space outlives the argument
    p.mul = [&g, qc](int a, int b) { return qc.coset_of[g.mul(qc.reps[a], qc.reps[b])]; };
    p.dim = k;
    p.act = [&g, qc](int c, ModuleVec v) {
        ModuleVec ambient = 0;
        for (std::size_t i = 0; i < qc.fixed_basis.size(); ++i)
            if ((v >> i) & 1u) ambient ^= qc.fixed_basis[i];
        ModuleVec moved = permute_vec(g.element(qc.reps[c]), ambient);
        return coords_in_basis(qc.fixed_basis, moved);
    };
    return CocycleSpace(std::move(p));
}

Cocycle inflate_cocycle(const Cocycle& omega_q, const ActionGroup& g, const Quotient& q) {
    Cocycle out;
    out.table.assign(g.size(), 0);
    for (int x = 0; x < g.size(); ++x) {
        ModuleVec v = omega_q.table[q.coset_of[x]];
        ModuleVec ambient = 0;
        for (std::size_t i = 0; i < q.fixed_basis.size(); ++i)
            if ((v >> i) & 1u) ambient ^= q.fixed_basis[i];
        out.table[x] = ambient;
    }
    return out;
}

int res_kernel_dimension(const ActionGroup& g, const ActionGroup& h) {
    auto space_g = cocycle_space(g);
    auto space_h = cocycle_space(h);
    auto reps = space_g.h1_class_reps();
    // rank of the induced map: growth of the span seeded with B^1(H)
    F2Basis span(space_h.coord_width());
    for (const auto& row : space_h.b1().rows()) span.insert(BitVec(row));
    int rank = 0;
    for (const auto& rep : reps)
        if (span.insert(space_h.coords_of(restrict_cocycle(rep, g, h)))) ++rank;
    return static_cast<int>(reps.size()) - rank;
}

int inf_image_dimension(const ActionGroup& g, const ActionGroup& k) {
    auto q = build_quotient(g, k);
    auto space_q = quotient_cocycle_space(g, q);
    auto space_g = cocycle_space(g);
    F2Basis span(space_g.coord_width());
    for (const auto& row : space_g.b1().rows()) span.insert(BitVec(row));
    int rank = 0;
    for (const auto& rep : space_q.h1_class_reps())
        if (span.insert(space_g.coords_of(inflate_cocycle(rep, g, q)))) ++rank;
    return rank;
}

IndicatorScanReport indicator_cocycle_scan(const ActionGroup& g_in, int cyclic_element_index) {
    IndicatorScanReport report;
    int k = g_in.degree();

    int r_index = cyclic_element_index;
    if (r_index < 0) {
        for (int i = 1; i < g_in.size(); ++i) {
            const Perm& p = g_in.element(i);
            int x = 0, len = 0;
            do {
                x = p(x);
                ++len;
            } while (x != 0 && len <= k);
            if (len == k) {
                r_index = i;
                break;
            }
        }
    }
    if (r_index < 0) {
        report.hypotheses_ok = false;
        report.hypothesis_issue = "no regular cyclic element";
        return report;
    }
    if (k % 2 == 0) {
        report.hypotheses_ok = false;
        report.hypothesis_issue = "degree is even";
        return report;
    }

    // relabel X so the designated element becomes x -> x + 1
    const Perm& r = g_in.element(r_index);
    std::vector<std::uint8_t> relabel(k);
    {
        int p = 0;
        for (int x = 0; x < k; ++x) {
            relabel[p] = static_cast<std::uint8_t>(x);
            p = r(p);
        }
    }
    Perm pi(std::move(relabel));
    auto conj = [&](const Perm& s) { return pi * s * pi.inverse(); };

    std::vector<Perm> new_gens{conj(r)};
    for (int gi : g_in.generator_indices()) new_gens.push_back(conj(g_in.element(gi)));
    auto g = ActionGroup::generate(k, std::move(new_gens), g_in.size() + 1);
    if (g.size() != g_in.size())
        throw ValidationError("indicator_cocycle_scan: relabeling changed the group order");

    std::vector<Perm> gen_perms;
    for (int gi : g.generator_indices()) gen_perms.push_back(g.element(gi));
    auto chain_group = GeneratedGroup::from_generators(k, gen_perms);
    if (!chain_group.is_transitive() || !is_primitive(chain_group)) {
        report.hypotheses_ok = false;
        report.hypothesis_issue = "action is not primitive";
        return report;
    }
    std::vector<std::uint8_t> neg(k);
    for (int x = 0; x < k; ++x) neg[x] = static_cast<std::uint8_t>(mod(-x, k));
    Perm iota(std::move(neg));
    for (int e = 0; e < g.size(); ++e)
        if (!g.contains(iota * g.element(e) * iota.inverse())) {
            report.hypotheses_ok = false;
            report.hypothesis_issue = "iota(i) does not normalize G";
            return report;
        }

    // cocycles vanishing on (Z_k)_r: zero out the rotation's slot (the
    // rotation is the first generator by construction)
    auto space = cocycle_space(g);
    int zc = space.z_dim();
    std::vector<BitVec> rows;
    std::vector<BitVec> zcoords;
    zcoords.reserve(zc);
    for (const auto& z : space.z_basis()) zcoords.push_back(space.coords_of(z));
    for (int bit = 0; bit < k; ++bit) {
        BitVec row(zc);
        for (int i = 0; i < zc; ++i)
            if (zcoords[i].get(bit)) row.set(i);
        rows.push_back(std::move(row));
    }
    auto combos = nullspace(rows, zc);
    report.vanishing_dim = static_cast<int>(combos.size());

    if (combos.empty()) {
        report.assertion_ok = true;  // only the zero cocycle
        return report;
    }
    if (combos.size() > 1) {
        report.assertion_ok = false;
        return report;
    }
    Cocycle omega;
    omega.table.assign(g.size(), 0);
    for (int i = 0; i < zc; ++i)
        if (combos[0].get(i)) omega = omega ^ space.z_basis()[i];
    ModuleVec ones = (k == 64) ? ~ModuleVec{0} : ((ModuleVec{1} << k) - 1);
    int zero_count = 0;
    for (auto v : omega.table) {
        if (v == 0)
            ++zero_count;
        else if (v != ones) {
            report.assertion_ok = false;
            return report;
        }
    }
    report.has_indicator = true;
    report.g0_order = zero_count;
    report.assertion_ok = (zero_count * 2 == g.size());
    return report;
}

}  // namespace circstab
