#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "circstab/aut_search.hpp"
#include "circstab/connection_set.hpp"
#include "circstab/group.hpp"
#include "circstab/perm.hpp"

namespace circstab {

// Chain automorphism of a reduced colored circulant digraph, stored as one
// period of layers: sigma_{j + period} = sigma_j, with sigma_0 = layers[0].
// Obs: for reduced digraphs one layer determines the whole bi-infinite
// sequence, and forward propagation is injective, so the layer orbit is a
// pure cycle.
struct ChainCertificate {
    ColoredConnectionSets base;
    std::vector<Perm> layers;

    int period() const { return static_cast<int>(layers.size()); }
    const Perm& layer(long j) const {
        long p = period();
        return layers[static_cast<std::size_t>(((j % p) + p) % p)];
    }
    // re-check every consecutive pair over two periods
    bool revalidate() const;
};

// The unique next layer compatible with every color, if any.
std::optional<Perm> propagate_layer(const ColoredConnectionSets& g, const Perm& sigma);

// Reusable propagation tables for one digraph (chain_extend rebuilds them
// per call otherwise; the exhaustive window walks need them cached).
class ChainPropagator {
public:
    explicit ChainPropagator(const ColoredConnectionSets& g);
    std::optional<Perm> step(const Perm& sigma) const;
    const ColoredConnectionSets& base() const { return base_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    ColoredConnectionSets base_;
};

std::optional<ChainCertificate> chain_extend(const ChainPropagator& prop, const Perm& sigma0,
                                             int step_cap = 1 << 20);

// Propagate sigma0 until it returns to itself (certificate) or fails
// (nullopt: sigma0 is not a chain projection). Errors on non-reduced
// input, where uniqueness of propagation fails.
std::optional<ChainCertificate> chain_extend(const ColoredConnectionSets& g, const Perm& sigma0,
                                             int step_cap = 1 << 20);

// gamma(sigma0) = sigma_1.
Perm gamma_chain(const ColoredConnectionSets& g, const Perm& sigma0);

// Subsample the layer sequence by a unit l and verify it is a chain
// automorphism of the multiplied digraph l*S_1, ..., l*S_k. Verification
// failure is theorem falsification.
ChainCertificate multiplier_transport(const ChainCertificate& cert, int l);

ColoredConnectionSets multiply_colored(int l, const ColoredConnectionSets& g);

// Window graph on Z_m x {0, 1} with the layer coloring: its color- and
// plane-preserving automorphisms are the pairs (sigma_0, sigma_1).
SearchGraph chain_window_graph(const ColoredConnectionSets& g);

// All chain projections: window-group elements whose layer-0 part
// propagates bi-infinitely. Walks the window group, so `element_cap`
// bounds the work.
std::vector<ChainCertificate> aut_ch_enumerate(const ColoredConnectionSets& g,
                                               std::uint64_t element_cap = 1u << 20,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

struct GammaPowerReport {
    std::size_t window_group_order = 0;
    std::size_t aut_ch_count = 0;
    bool power_law_ok = true;        // gamma^m = id on every element
    bool conjugation_ok = true;      // iota(psi_l) . gamma . iota(psi_l)^-1 = gamma^l
    bool transport_ok = true;        // subsampled certificates revalidate
    std::vector<std::string> issues;
    bool ok() const { return power_law_ok && conjugation_ok && transport_ok; }
};

// gamma^m = id on every element of Aut^Ch; the conjugation and transport
// laws for every unit l on a deterministic sample of elements.
GammaPowerReport verify_gamma_power_law(const ColoredConnectionSets& g,
                                        std::uint64_t element_cap = 1u << 20,
                                        std::size_t law_sample = 64);

// Number of length-p directed paths x -> y in color j, mod p.
int proper_path_census(const ColoredConnectionSets& g, int color, int p, int x, int y);

}  // namespace circstab
