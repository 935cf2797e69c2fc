#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circstab/connection_set.hpp"

namespace circstab::suites {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string label, bool pass, std::string detail = "") {
        checks.push_back({std::move(label), pass, std::move(detail)});
    }
};

// Every nonempty symmetric connection set over Z_n, ascending encoding.
std::vector<ConnectionSet> all_connection_sets(int n);
// Distinct uniformly sampled nonempty symmetric sets (deterministic seed).
std::vector<ConnectionSet> sampled_connection_sets(int n, int count, std::uint64_t seed);

// The main-theorem audit: oracle instability iff condition i or ii, for
// every connected non-bipartite instance. Condition-ii witnesses also get
// the multiplier-isomorphism check (x -> lx onto S + n/2).
SuiteReport criteria_oracle_audit(const std::vector<ConnectionSet>& sets, const std::string& name,
                           int parallel = 1);

// Odd-order corollary: connected reduced instances are stable.
SuiteReport odd_order_audit(const std::vector<int>& ns);

// gamma/alpha laws on the nontrivially unstable instances of the given
// moduli: involution, fixed points, anti-cocycle law, flip family, and
// the L/C/B block systems.
SuiteReport alpha_gamma_audit(const std::vector<int>& ns);

// Schur dichotomy for unstable connected non-bipartite instances plus
// ring-axiom checks for all computed transitivity modules.
SuiteReport schur_audit(const std::vector<int>& ns);

// Replacement property: full-kernel configs and a forced-sampling config.
SuiteReport replacement_audit(std::uint64_t seed = 0x5eed, int sets_per_config = 20);

// Chain laws: gamma^m = id over every element of Aut^Ch for all reduced
// colored circulant digraphs with <= max_colors colors of size <= max_set,
// plus transport/conjugation for every unit.
SuiteReport chain_laws_audit(const std::vector<int>& ms, int max_colors = 2, int max_set = 2);

// The cohomology dimension table, Thm-1.3 scans, and res/cores/inf laws.
SuiteReport cohomology_dimension_audit();
SuiteReport indicator_scan_audit();
SuiteReport res_cores_audit();

// Conjecture probe: oracle-unstable instances at n = 2m (m odd) lacking
// both condition i and an isomorphism Cay(S) ~ Cay(S+m). Reports only.
struct ProbeAnomaly {
    std::string set;
    bool multiplier_witness = false;
    bool isomorphic = false;
};
std::vector<ProbeAnomaly> conjecture_probe(const std::vector<ConnectionSet>& sets);

SuiteReport run_named_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace circstab::suites
