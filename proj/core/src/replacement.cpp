#include "circstab/replacement.hpp"

#include <random>

#include "circstab/graph.hpp"

namespace circstab {

std::string replacement_report_to_json(const ReplacementReport& r) {
    std::string out = "{\"n\":" + std::to_string(r.n);
    out += ",\"set\":\"" + r.set + "\"";
    out += ",\"H\":" + std::to_string(r.subgroup_order);
    out += ",\"checked\":" + std::to_string(r.checked);
    out += ",\"passed\":" + std::to_string(r.passed);
    out += ",\"mode\":\"" + r.mode + "\"";
    out += ",\"failures\":[";
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int x = 0; x < r.failures[i].degree(); ++x) {
            if (x) out += ',';
            out += std::to_string(r.failures[i](x));
        }
        out += ']';
    }
    out += "]}";
    return out;
}

ReplacementReport replacement_verify(const ConnectionSet& s, const CyclicSubgroup& h,
                                     int sample_budget, bool probe, std::uint64_t full_cap,
                                     std::uint64_t seed, std::uint64_t node_budget) {
    if (h.modulus != s.n) throw ValidationError("replacement_verify: subgroup modulus mismatch");
    int n = s.n;
    int l1 = h.order();
    int l2 = n / l1;
    ReplacementReport report;
    report.n = n;
    report.set = s.to_string();
    report.subgroup_order = l1;
    report.coprime = gcd(l1, l2) == 1;
    if (!report.coprime && !probe)
        throw ValidationError(
            "replacement_verify: |H| and n/|H| must be coprime (theorem hypothesis); "
            "pass probe=true to run anyway");

    auto cosets = coset_partition(h);
    // f picks the CRT section: the unique member of each coset lying in
    // l1*Z_n (coprime case). Probe mode falls back to minimum elements.
    std::vector<int> f_of_coset(cosets.blocks.size(), 0);
    auto coset_idx = cosets.block_index(n);
    for (std::size_t b = 0; b < cosets.blocks.size(); ++b) {
        if (report.coprime) {
            int found = -1;
            for (int v : cosets.blocks[b])
                if (v % l1 == 0) {
                    found = v;
                    break;
                }
            if (found < 0) throw ValidationError("replacement_verify: CRT section missing");
            f_of_coset[b] = found;
        } else {
            f_of_coset[b] = cosets.blocks[b].front();
        }
    }
    if (f_of_coset[coset_idx[0]] != 0)
        throw ValidationError("replacement_verify: f(H) must be the identity");

    auto g = build_circulant(s);
    auto kernel = partition_kernel(g, cosets, node_budget);

    auto check_sigma = [&](const Perm& sigma) {
        // sigma~ copies sigma|_H onto every coset through f
        std::vector<std::uint8_t> img(n);
        for (int v = 0; v < n; ++v) {
            int f = f_of_coset[coset_idx[v]];
            img[v] = static_cast<std::uint8_t>(mod(sigma(mod(v - f, n)) + f, n));
        }
        Perm sigma_t(std::move(img));
        ++report.checked;
        bool ok = sigma_t.is_valid();
        for (int v = 0; v < n && ok; ++v) {
            BitSet128 mapped;
            g.adj[v].for_each([&](int w) { mapped.set(sigma_t(w)); });
            if (!(mapped == g.adj[sigma_t(v)])) ok = false;
            if (coset_idx[sigma_t(v)] != coset_idx[v]) ok = false;
        }
        if (ok)
            ++report.passed;
        else
            report.failures.push_back(sigma);
    };

    if (kernel.order() <= full_cap) {
        report.mode = "full";
        kernel.for_each_element(
            [&](const Perm& sigma) {
                check_sigma(sigma);
                return true;
            },
            full_cap);
    } else {
        report.mode = "sampled";
        for (const auto& gen : kernel.generators()) check_sigma(gen);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < sample_budget; ++i) check_sigma(kernel.random_element(rng));
    }
    return report;
}

}  // namespace circstab
