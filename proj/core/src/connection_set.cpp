#include "circstab/connection_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace circstab {

ConnectionSet::ConnectionSet(int n_, std::uint64_t bits_, bool validate) : n(n_), bits(bits_) {
    if (n < 1 || n > kMaxModulus) throw ValidationError("ConnectionSet: modulus out of range");
    if (n < 64 && (bits >> n) != 0) throw ValidationError("ConnectionSet: member out of range");
    if (!validate) return;
    if (bits & 1u) throw ValidationError("ConnectionSet: 0 is not allowed in S");
    for (int s = 1; s < n; ++s)
        if (contains(s) != contains(n - s))
            throw ValidationError("ConnectionSet: S must be symmetric (S = -S)");
}

ConnectionSet::ConnectionSet(int n_, const std::vector<int>& members, bool validate)
    : ConnectionSet(n_,
                    [&] {
                        std::uint64_t b = 0;
                        for (int s : members) {
                            if (s < 0 || s >= n_) throw ValidationError("ConnectionSet: member out of range");
                            b |= std::uint64_t{1} << s;
                        }
                        return b;
                    }(),
                    validate) {}

int ConnectionSet::size() const { return std::popcount(bits); }

std::vector<int> ConnectionSet::members() const {
    std::vector<int> out;
    for (int s = 0; s < n; ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

ConnectionSet ConnectionSet::shifted(int h) const {
    ConnectionSet r(n, std::uint64_t{0}, false);
    for (int s = 0; s < n; ++s)
        if (contains(s)) r.bits |= std::uint64_t{1} << mod(s + h, n);
    return r;
}

std::string ConnectionSet::to_string() const {
    std::ostringstream os;
    os << n << ':';
    bool first = true;
    for (int s : members()) {
        if (!first) os << ',';
        os << s;
        first = false;
    }
    return os.str();
}

ConnectionSet ConnectionSet::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ValidationError("ConnectionSet: expected \"n:s1,s2,...\"");
    int n = 0;
    try {
        n = std::stoi(text.substr(0, colon));
    } catch (...) {
        throw ValidationError("ConnectionSet: bad modulus");
    }
    return parse_members(n, text.substr(colon + 1));
}

ConnectionSet ConnectionSet::parse_members(int n, const std::string& csv) {
    std::vector<int> members;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            members.push_back(std::stoi(tok));
        } catch (...) {
            throw ValidationError("ConnectionSet: bad member '" + tok + "'");
        }
    }
    return ConnectionSet(n, members);
}

ColoredConnectionSets::ColoredConnectionSets(int n_, std::vector<std::uint64_t> colors_)
    : n(n_), colors(std::move(colors_)) {
    if (n < 1 || n > kMaxModulus) throw ValidationError("ColoredConnectionSets: modulus out of range");
    for (auto c : colors)
        if (n < 64 && (c >> n) != 0) throw ValidationError("ColoredConnectionSets: member out of range");
}

std::vector<int> ColoredConnectionSets::members(int c) const {
    std::vector<int> out;
    for (int s = 0; s < n; ++s)
        if (contains(c, s)) out.push_back(s);
    return out;
}

std::uint64_t multiply_mask(int l, int n, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int s = 0; s < n; ++s)
        if ((mask >> s) & 1u) out |= std::uint64_t{1} << mod(l * s, n);
    return out;
}

std::optional<int> ColoredConnectionSets::common_shift() const {
    for (int h = 1; h < n; ++h) {
        bool all = true;
        for (auto c : colors) {
            std::uint64_t shifted = 0;
            for (int s = 0; s < n; ++s)
                if ((c >> s) & 1u) shifted |= std::uint64_t{1} << mod(s + h, n);
            if (shifted != c) {
                all = false;
                break;
            }
        }
        if (all) return h;
    }
    return std::nullopt;
}

bool ColoredConnectionSets::is_reduced() const { return !common_shift().has_value(); }

ConnectionSet multiply_set(int l, const ConnectionSet& s) {
    if (gcd(mod(l, s.n), s.n) != 1) throw ValidationError("multiply_set: l must be a unit mod n");
    return ConnectionSet(s.n, multiply_mask(l, s.n, s.bits), false);
}

std::optional<int> circulant_reduced_shift(const ConnectionSet& s) {
    for (int h = 1; h < s.n; ++h)
        if (s.shifted(h) == s) return h;
    return std::nullopt;
}

namespace {
CyclicSubgroup shift_stabilizer(int n, const std::vector<std::uint64_t>& masks) {
    // {h : mask + h = mask for all masks} is a subgroup of Z_n; find its
    // smallest positive element (or n for the trivial subgroup).
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (auto m : masks) {
            std::uint64_t shifted = 0;
            for (int s = 0; s < n; ++s)
                if ((m >> s) & 1u) shifted |= std::uint64_t{1} << mod(s + d, n);
            if (shifted != m) {
                ok = false;
                break;
            }
        }
        if (ok) return {n, d};
    }
    return {n, n};
}
}  // namespace

CyclicSubgroup radical(const ConnectionSet& s) { return shift_stabilizer(s.n, {s.bits}); }

CyclicSubgroup radical(const ColoredConnectionSets& cs) { return shift_stabilizer(cs.n, cs.colors); }

ReflectiveSplit reflective_split(const ConnectionSet& s) {
    if (s.n % 2 != 0) throw ValidationError("reflective_split: n must be even");
    int m = s.n / 2;
    std::uint64_t refl = 0, anti = 0;
    for (int x = 0; x < s.n; ++x) {
        if (!s.contains(x)) continue;
        if (s.contains(x + m))
            refl |= std::uint64_t{1} << x;
        else
            anti |= std::uint64_t{1} << x;
    }
    return {ConnectionSet(s.n, refl, false), ConnectionSet(s.n, anti, false)};
}

ColoredConnectionSets quotient_colored(const ConnectionSet& s) {
    if (s.n % 2 != 0) throw ValidationError("quotient_colored: n must be even");
    int m = s.n / 2;
    auto [sr, sa] = reflective_split(s);
    std::uint64_t refl = 0, anti = 0;
    for (int d = 0; d < m; ++d) {
        if (sr.contains(d) || sr.contains(d + m)) refl |= std::uint64_t{1} << d;
        if (sa.contains(d) || sa.contains(d + m)) anti |= std::uint64_t{1} << d;
    }
    return ColoredConnectionSets(m, {refl, anti});
}

}  // namespace circstab
