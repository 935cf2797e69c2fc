#include "circstab/chains.hpp"

#include <algorithm>
#include <unordered_map>

namespace circstab {

namespace {

// in/out neighborhoods per color as bit masks over Z_m
struct DigraphTables {
    int m;
    int colors;
    std::vector<std::uint64_t> in;   // in[c * m + y]
    std::vector<std::uint64_t> out;  // out[c * m + x]

    explicit DigraphTables(const ColoredConnectionSets& g)
        : m(g.n), colors(g.color_count()), in(colors * m, 0), out(colors * m, 0) {
        for (int c = 0; c < colors; ++c)
            for (int s = 0; s < m; ++s) {
                if (!g.contains(c, s)) continue;
                for (int x = 0; x < m; ++x) {
                    out[c * m + x] |= std::uint64_t{1} << mod(x + s, m);
                    in[c * m + mod(x + s, m)] |= std::uint64_t{1} << x;
                }
            }
    }

    std::uint64_t remap(std::uint64_t mask, const Perm& sigma) const {
        std::uint64_t r = 0;
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            r |= std::uint64_t{1} << sigma(v);
        }
        return r;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

struct ChainPropagator::Impl {
    DigraphTables tables;
    // vertex keyed by its colored in-neighborhood tuple; reduced inputs
    // make the key unique
    std::unordered_map<std::vector<std::uint64_t>, int, VecHash> by_in;

    explicit Impl(const ColoredConnectionSets& g) : tables(g) {
        std::vector<std::uint64_t> key(tables.colors);
        for (int v = 0; v < tables.m; ++v) {
            for (int c = 0; c < tables.colors; ++c) key[c] = tables.in[c * tables.m + v];
            by_in.emplace(key, v);
        }
    }
};

ChainPropagator::ChainPropagator(const ColoredConnectionSets& g) : base_(g) {
    if (!g.is_reduced())
        throw ValidationError("chain propagation: digraph must be reduced");
    impl_ = std::make_shared<const Impl>(g);
}

std::optional<Perm> ChainPropagator::step(const Perm& sigma) const {
    const auto& t = impl_->tables;
    std::vector<std::uint64_t> key(t.colors);
    std::vector<std::uint8_t> next(t.m);
    for (int y = 0; y < t.m; ++y) {
        for (int c = 0; c < t.colors; ++c) key[c] = t.remap(t.in[c * t.m + y], sigma);
        auto it = impl_->by_in.find(key);
        if (it == impl_->by_in.end()) return std::nullopt;
        next[y] = static_cast<std::uint8_t>(it->second);
    }
    return Perm(std::move(next));
}

std::optional<Perm> propagate_layer(const ColoredConnectionSets& g, const Perm& sigma) {
    return ChainPropagator(g).step(sigma);
}

bool ChainCertificate::revalidate() const {
    DigraphTables t(base);
    int p = period();
    for (int j = 0; j < 2 * p; ++j) {
        const Perm& cur = layer(j);
        const Perm& nxt = layer(j + 1);
        for (int c = 0; c < t.colors; ++c)
            for (int x = 0; x < t.m; ++x)
                if (t.remap(t.out[c * t.m + x], nxt) != t.out[c * t.m + cur(x)]) return false;
    }
    return true;
}

std::optional<ChainCertificate> chain_extend(const ChainPropagator& prop, const Perm& sigma0,
                                             int step_cap) {
    if (sigma0.degree() != prop.base().n) throw ValidationError("chain_extend: degree mismatch");
    ChainCertificate cert;
    cert.base = prop.base();
    cert.layers.push_back(sigma0);
    Perm cur = sigma0;
    for (int step = 0; step < step_cap; ++step) {
        auto next = prop.step(cur);
        if (!next) return std::nullopt;
        if (*next == sigma0) return cert;  // pure cycle closed
        cert.layers.push_back(*next);
        cur = std::move(*next);
    }
    throw BudgetExceeded("chain_extend: step cap exceeded");
}

std::optional<ChainCertificate> chain_extend(const ColoredConnectionSets& g, const Perm& sigma0,
                                             int step_cap) {
    return chain_extend(ChainPropagator(g), sigma0, step_cap);
}

Perm gamma_chain(const ColoredConnectionSets& g, const Perm& sigma0) {
    auto cert = chain_extend(g, sigma0);
    if (!cert) throw ValidationError("gamma_chain: sigma0 is not a chain projection");
    return cert->layer(1);
}

ColoredConnectionSets multiply_colored(int l, const ColoredConnectionSets& g) {
    if (gcd(mod(l, g.n), g.n) != 1)
        throw ValidationError("multiply_colored: l must be a unit mod m");
    std::vector<std::uint64_t> colors;
    for (auto c : g.colors) colors.push_back(multiply_mask(l, g.n, c));
    return ColoredConnectionSets(g.n, std::move(colors));
}

ChainCertificate multiplier_transport(const ChainCertificate& cert, int l) {
    int m = cert.base.n;
    if (gcd(mod(l, m), m) != 1)
        throw ValidationError("multiplier_transport: l must be coprime to m");
    ChainCertificate out;
    out.base = multiply_colored(l, cert.base);
    // tau_i = sigma_{l i} has period p / gcd(l, p)
    int p = cert.period();
    int sub_period = p / gcd(l, p);
    for (int i = 0; i < sub_period; ++i) out.layers.push_back(cert.layer(static_cast<long>(l) * i));
    if (!out.revalidate())
        throw FalsificationError("multiplier_transport: subsampled layers fail on the multiplied digraph");
    return out;
}

SearchGraph chain_window_graph(const ColoredConnectionSets& g) {
    SearchGraph sg;
    int m = g.n;
    sg.n = 2 * m;
    sg.colors.assign(2 * m, 0);
    for (int v = m; v < 2 * m; ++v) sg.colors[v] = 1;
    for (int c = 0; c < g.color_count(); ++c) {
        std::vector<BitSet128> out(2 * m), in(2 * m);
        for (int x = 0; x < m; ++x)
            for (int s = 0; s < m; ++s)
                if (g.contains(c, s)) {
                    int y = mod(x + s, m);
                    out[x].set(m + y);
                    in[m + y].set(x);
                }
        sg.planes.push_back(std::move(out));
        sg.planes.push_back(std::move(in));
    }
    return sg;
}

std::vector<ChainCertificate> aut_ch_enumerate(const ColoredConnectionSets& g,
                                               std::uint64_t element_cap,
                                               std::uint64_t node_budget) {
    ChainPropagator prop(g);
    auto window = GeneratedGroup::from_generators(
        2 * g.n, automorphism_generators(chain_window_graph(g), node_budget));
    std::vector<ChainCertificate> out;
    window.for_each_element(
        [&](const Perm& tau) {
            std::vector<std::uint8_t> s0(g.n);
            for (int v = 0; v < g.n; ++v) s0[v] = static_cast<std::uint8_t>(tau(v));
            if (auto cert = chain_extend(prop, Perm(std::move(s0)))) out.push_back(std::move(*cert));
            return true;
        },
        element_cap);
    return out;
}

GammaPowerReport verify_gamma_power_law(const ColoredConnectionSets& g,
                                        std::uint64_t element_cap, std::size_t law_sample) {
    GammaPowerReport report;
    int m = g.n;
    ChainPropagator prop(g);
    auto window = GeneratedGroup::from_generators(
        2 * m, automorphism_generators(chain_window_graph(g)));
    report.window_group_order = static_cast<std::size_t>(window.order());

    std::vector<ChainCertificate> sample;
    window.for_each_element(
        [&](const Perm& tau) {
            std::vector<std::uint8_t> s0(m);
            for (int v = 0; v < m; ++v) s0[v] = static_cast<std::uint8_t>(tau(v));
            auto cert = chain_extend(prop, Perm(std::move(s0)));
            if (!cert) return true;
            ++report.aut_ch_count;
            // gamma^m = id iff the period divides m
            if (m % cert->period() != 0) {
                report.power_law_ok = false;
                report.issues.push_back("gamma^m != id at period " + std::to_string(cert->period()));
            }
            if (sample.size() < law_sample) sample.push_back(std::move(*cert));
            return true;
        },
        element_cap);

    for (int l : units(m)) {
        // psi_l as a permutation of Z_m
        std::vector<std::uint8_t> psi(m);
        for (int x = 0; x < m; ++x) psi[x] = static_cast<std::uint8_t>(mod(l * x, m));
        Perm psi_l(std::move(psi));
        for (const auto& cert : sample) {
            const Perm& tau = cert.layers.front();
            // conjugation law: iota(psi_l) gamma iota(psi_l)^{-1} (tau) = gamma^l(tau)
            Perm conj_in = psi_l.inverse() * tau * psi_l;
            auto conj_cert = chain_extend(prop, conj_in);
            if (!conj_cert) {
                report.conjugation_ok = false;
                report.issues.push_back("iota(psi_l) does not preserve Aut^Ch at l=" +
                                        std::to_string(l));
                continue;
            }
            Perm lhs = psi_l * conj_cert->layer(1) * psi_l.inverse();
            if (!(lhs == cert.layer(l))) {
                report.conjugation_ok = false;
                report.issues.push_back("conjugation law fails at l=" + std::to_string(l));
            }
            try {
                auto transported = multiplier_transport(cert, l);
                if (!transported.revalidate()) {
                    report.transport_ok = false;
                    report.issues.push_back("transport revalidation failed at l=" +
                                            std::to_string(l));
                }
            } catch (const FalsificationError& e) {
                report.transport_ok = false;
                report.issues.push_back(e.what());
            }
        }
    }
    return report;
}

int proper_path_census(const ColoredConnectionSets& g, int color, int p, int x, int y) {
    if (p < 2) throw ValidationError("proper_path_census: p must be a prime >= 2");
    int m = g.n;
    std::vector<int> ways(m, 0), next(m, 0);
    ways[mod(x, m)] = 1;
    for (int step = 0; step < p; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int v = 0; v < m; ++v) {
            if (!ways[v]) continue;
            for (int s = 0; s < m; ++s)
                if (g.contains(color, s)) next[mod(v + s, m)] = (next[mod(v + s, m)] + ways[v]) % p;
        }
        ways.swap(next);
    }
    return ways[mod(y, m)];
}

}  // namespace circstab
