#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circstab/aut_search.hpp"
#include "circstab/connection_set.hpp"
#include "circstab/graph.hpp"
#include "circstab/group.hpp"

namespace circstab {

// Pair (sigma1, sigma2) acting on Gamma x K_2 by (v, i) -> (sigma_{i+1} v, i).
struct TwoFoldPair {
    Perm sigma1;
    Perm sigma2;

    bool is_two_fold_automorphism(const DenseGraph& base) const;
};

// Layer-preserving subgroup of Aut(Gamma x K_2) plus data shared by the
// alpha/gamma machinery. Requires Gamma connected and non-bipartite.
struct TwoFoldGroup {
    DenseGraph base;
    DenseGraph cover;          // with layer coloring
    GeneratedGroup group;      // on 2n points, layer-preserving
    std::vector<TwoFoldPair> generator_pairs;

    // Aut^pi(Gamma): first projections as a group on the base vertices.
    GeneratedGroup projections() const;
};

TwoFoldGroup tf_group(const DenseGraph& gamma,
                      std::uint64_t node_budget = kDefaultNodeBudget);

// Slow-path witness extraction: a two-fold pair with sigma1 != sigma2
// (nullopt for stable graphs). The order comparison in classify() never
// needs this; reports do.
std::optional<TwoFoldPair> unexpected_symmetry_witness(
    const DenseGraph& gamma, std::uint64_t node_budget = kDefaultNodeBudget);

// The unique partner gamma(sigma) with (sigma, gamma(sigma)) two-fold,
// for reduced Gamma. Throws ValidationError when sigma has no partner
// (sigma not in Aut^pi).
Perm gamma_partner(const DenseGraph& gamma, const Perm& sigma);
std::optional<Perm> try_gamma_partner(const DenseGraph& gamma, const Perm& sigma);

// alpha(sigma) = sigma^{-1} o gamma(sigma), with its displacement vector
// when the value lies in the flip family {x -> x or x + m}.
struct AlphaValue {
    Perm value;
    // bit per L-coset: set iff alpha shifts that coset by m; only
    // meaningful when in_flip_family
    std::uint64_t displacement = 0;
    bool in_flip_family = false;
};

AlphaValue alpha_of(const DenseGraph& gamma, const Perm& sigma);

// Basic set of the cover generator a: orbit of vertex a = (0, 1) under
// the stabilizer of the identity vertex in Aut(Gamma x K_2).
std::vector<int> basic_set_a(const DenseGraph& gamma,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Thm condition (i): smallest nonzero even h with S∩2Z_n + h = S∩2Z_n.
// The empty even part reads as "no witness" (an all-odd S is bipartite
// and never reaches this check in classification).
std::optional<int> condition_i(const ConnectionSet& s);

// Thm condition (ii): smallest unit l with l*S = S + n/2.
std::optional<int> condition_ii(const ConnectionSet& s);

enum class StabilityStatus { Stable, TriviallyUnstable, NontriviallyUnstable };
enum class StabilityReason {
    None,
    Disconnected,
    Bipartite,
    NonReduced,
    ConditionI,
    ConditionII,
    OracleUnexpectedSymmetry,
};

struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::Stable;
    StabilityReason reason = StabilityReason::None;
    std::optional<int> witness;        // h or l, depending on reason
    BigInt aut_order = 0;              // filled by oracle / cross-check
    BigInt cover_aut_order = 0;
    bool unstable() const { return status != StabilityStatus::Stable; }
};

enum class ClassifyMode { Criteria, Oracle, CrossCheck };

struct CrossCheckDisagreement {
    StabilityVerdict criteria;
    StabilityVerdict oracle;
};

// Criteria mode: connectivity/bipartite/reduced screens then conditions
// i/ii. Oracle mode: |Aut(Gamma x K2)| = 2|Aut(Gamma)| iff stable.
// Cross-check runs both and throws FalsificationError on disagreement.
StabilityVerdict classify(const ConnectionSet& s, ClassifyMode mode,
                          std::uint64_t node_budget = kDefaultNodeBudget);

std::string to_string(StabilityStatus s);
std::string to_string(StabilityReason r);

// JSON object {n, set, status, reason, witness, aut_order, cover_aut_order}
// with fixed key order: survey records must be byte-identical across runs.
std::string verdict_to_json(const ConnectionSet& s, const StabilityVerdict& v);

// Image of Aut^pi in Sym(L-cosets) x F_2[L-cosets]: the induced block
// permutation together with the alpha displacement vector, closed under
// composition d_{st}(x) = d_t(x) + d_s(t.x).
struct DisplacementElement {
    Perm block_perm;               // action on the m L-cosets
    std::uint64_t displacement;    // bit per L-coset

    bool operator==(const DisplacementElement&) const = default;
};

struct DisplacementClosure {
    int m = 0;
    std::vector<DisplacementElement> elements;

    // partition of the L-cosets by equal displacement columns
    IndexPartition coset_classes() const;
};

// Breadth-first closure from the tf_group generator images; throws
// BudgetExceeded past `state_cap` states (callers may fall back to full
// enumeration).
DisplacementClosure displacement_closure(const TwoFoldGroup& tf, std::size_t state_cap = 1u << 16);

struct PartitionsLCB {
    IndexPartition l_cosets;
    IndexPartition c_cosets;
    IndexPartition b_partition;
    CyclicSubgroup c_subgroup;
    CyclicSubgroup b_subgroup;
};

// The L / C / B block systems of a Hypothesis-2.8 instance.
PartitionsLCB partitions_lcb(const ConnectionSet& s, const TwoFoldGroup& tf,
                             std::size_t state_cap = 1u << 16);

// alpha(sigma).x - x constant on every block of p, over the closure.
bool alpha_homogeneous(const DisplacementClosure& closure, const IndexPartition& p);

// Lemma "local behavior of alpha": equal restrictions to a C-coset have
// equal alpha restrictions there. Precondition sigma1|c = sigma2|c.
bool local_alpha_check(const DenseGraph& gamma, const std::vector<int>& c_coset,
                       const Perm& sigma1, const Perm& sigma2);

}  // namespace circstab
