#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circstab/aut_search.hpp"
#include "circstab/connection_set.hpp"
#include "circstab/perm.hpp"
#include "circstab/zn.hpp"

namespace circstab {

struct ReplacementReport {
    int n = 0;
    std::string set;
    int subgroup_order = 0;
    bool coprime = false;
    std::string mode;  // "full" or "sampled"
    long checked = 0;
    long passed = 0;
    std::vector<Perm> failures;

    bool all_passed() const { return checked == passed; }
};

// {n, set, H, checked, passed, mode, failures: []} with fixed key order.
std::string replacement_report_to_json(const ReplacementReport& r);

// Replacement property of (Cay(Z_n, S), H): every sigma in Aut_H (the
// kernel of the H-coset partition) admits sigma~ acting on each coset as
// the f-conjugated copy of sigma|_H, with f the CRT section. Verifies
// element by element: full kernel walk when |Aut_H| <= full_cap, else
// generators plus `sample_budget` seeded random elements.
//
// Coprime |H|, n/|H| is the theorem hypothesis; non-coprime input is
// rejected unless `probe` is set, in which case failures are informative.
ReplacementReport replacement_verify(const ConnectionSet& s, const CyclicSubgroup& h,
                                     int sample_budget = 500, bool probe = false,
                                     std::uint64_t full_cap = 100000,
                                     std::uint64_t seed = 0x5eed,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace circstab
