#pragma once

#include <functional>
#include <string>
#include <vector>

#include "circstab/action_group.hpp"
#include "circstab/f2.hpp"

namespace circstab {

// Module vectors over F_2 with dimension <= 64, packed into a word.
using ModuleVec = std::uint64_t;

// Group + F_2-linear action for the cocycle solver. `mul(i, j)` composes
// element indices (apply j first); `act(e, v)` applies element e to a
// module vector.
struct CocycleProblem {
    int group_size = 0;
    std::vector<int> gens;  // element indices; must generate
    std::function<int(int, int)> mul;
    int dim = 0;
    std::function<ModuleVec(int, ModuleVec)> act;
};

// Cocycle as its full value table, indexed by group element.
struct Cocycle {
    std::vector<ModuleVec> table;
    bool zero() const {
        for (auto v : table)
            if (v) return false;
        return true;
    }
    Cocycle operator^(const Cocycle& o) const {
        Cocycle r = *this;
        for (std::size_t i = 0; i < table.size(); ++i) r.table[i] ^= o.table[i];
        return r;
    }
};

// Z^1 and B^1 of a solved problem. Cocycles are identified by their
// values on the generators (which determine the full table), so class
// arithmetic reduces to F_2 rows of width gens * dim.
class CocycleSpace {
public:
    CocycleSpace(CocycleProblem problem);

    int z_dim() const { return static_cast<int>(z_basis_.size()); }
    int b_dim() const { return b_basis_.rank(); }
    int h1_dim() const { return z_dim() - b_dim(); }

    const std::vector<Cocycle>& z_basis() const { return z_basis_; }
    const CocycleProblem& problem() const { return problem_; }
    int coord_width() const { return coord_width_; }
    const F2Basis& b1() const { return b_basis_; }

    BitVec coords_of(const Cocycle& c) const;
    bool is_coboundary(const Cocycle& c) const { return b_basis_.contains(coords_of(c)); }
    bool same_class(const Cocycle& a, const Cocycle& b) const {
        return b_basis_.contains(coords_of(a) ^ coords_of(b));
    }

    // independent representatives of H^1 classes drawn from the Z^1 basis
    std::vector<Cocycle> h1_class_reps() const;

    // expand a coordinate vector into a full table (must satisfy the
    // cocycle constraints; callers use vectors from the solved space)
    Cocycle expand(const BitVec& u) const;

    // verify the cocycle identity on all pairs (small groups) or a sample
    bool verify_identity(const Cocycle& c, int sample_pairs = 0,
                         std::uint64_t seed = 1) const;

private:
    CocycleProblem problem_;
    int coord_width_;
    std::vector<std::vector<BitVec>> expr_;  // expr_[x][r]: bit r of omega(x) as <row, u>
    std::vector<Cocycle> z_basis_;
    F2Basis b_basis_;
};

// F_2[X] with the permutation action of an enumerated group.
CocycleProblem permutation_module_problem(const ActionGroup& g);
CocycleSpace cocycle_space(const ActionGroup& g);
int h1_dimension(const ActionGroup& g);

// coboundary dimension |X| - dim M^G, via the solved space
int b1_dimension(const ActionGroup& g);

// --- class maps ---------------------------------------------------------

// omega|_H: h must consist of elements of g.
Cocycle restrict_cocycle(const Cocycle& omega, const ActionGroup& g, const ActionGroup& h);

// transfer along the minimal-index left-coset representatives
Cocycle corestrict_cocycle(const Cocycle& omega_h, const ActionGroup& g, const ActionGroup& h);

// Quotient by a normal subgroup K with the fixed submodule M^K.
struct Quotient {
    int size = 0;
    std::vector<int> coset_of;           // per G element index
    std::vector<int> reps;               // min-index representative per coset
    std::vector<int> gen_cosets;         // images of G's generators
    std::vector<ModuleVec> fixed_basis;  // basis of M^K in ambient coordinates
};
Quotient build_quotient(const ActionGroup& g, const ActionGroup& k);

// Z^1(G/K, M^K) in fixed-basis coordinates.
CocycleSpace quotient_cocycle_space(const ActionGroup& g, const Quotient& q);

// inf: compose with the quotient map and expand values to ambient F_2[X].
Cocycle inflate_cocycle(const Cocycle& omega_q, const ActionGroup& g, const Quotient& q);

// dim ker(res: H^1(G) -> H^1(H)) and dim im(inf: H^1(G/K, M^K) -> H^1(G));
// exactness of inflation-restriction is their equality (with H = K).
int res_kernel_dimension(const ActionGroup& g, const ActionGroup& h);
int inf_image_dimension(const ActionGroup& g, const ActionGroup& k);

// --- index-2 indicator scan ----------------------------------------------

struct IndicatorScanReport {
    bool hypotheses_ok = true;
    std::string hypothesis_issue;
    bool assertion_ok = false;   // false after a genuine scan failure
    int vanishing_dim = 0;       // cocycles vanishing on the cyclic subgroup
    bool has_indicator = false;  // the G0-indicator cocycle was found
    int g0_order = 0;
};

// Scan the cocycles vanishing on a designated regular cyclic subgroup:
// the set must be {0} or {0, indicator of G \ G0 with value all-ones}.
// `cyclic_element_index` designates the k-cycle generating (Z_k)_r; pass
// -1 to pick the first regular k-cycle in element order.
IndicatorScanReport indicator_cocycle_scan(const ActionGroup& g, int cyclic_element_index = -1);

}  // namespace circstab
