#include "circstab/projective.hpp"

#include "circstab/errors.hpp"
#include "circstab/zn.hpp"

namespace circstab {

GF2e::GF2e(int ell_) : ell(ell_), q(1 << ell_) {
    if (ell != 2 && ell != 3) throw ValidationError("GF2e: only ell in {2, 3} is wired up");
}

int GF2e::mul(int a, int b) const {
    int poly = (ell == 2) ? 0b111 : 0b1011;  // t^2+t+1 / t^3+t+1
    int acc = 0;
    for (int i = 0; i < ell; ++i)
        if ((b >> i) & 1) acc ^= a << i;
    for (int d = 2 * ell - 2; d >= ell; --d)
        if ((acc >> d) & 1) acc ^= poly << (d - ell);
    return acc;
}

int GF2e::inv(int a) const {
    if (a == 0) throw ValidationError("GF2e: zero has no inverse");
    for (int b = 1; b < q; ++b)
        if (mul(a, b) == 1) return b;
    throw ValidationError("GF2e: inverse not found");
}

Perm moebius_perm(const GF2e& f, int a, int b, int c, int d) {
    int det = f.add(f.mul(a, d), f.mul(b, c));
    if (det == 0) throw ValidationError("moebius_perm: singular matrix");
    int inf = f.q;
    std::vector<std::uint8_t> img(f.q + 1);
    for (int z = 0; z <= f.q; ++z) {
        int num, den;
        if (z == inf) {
            num = a;
            den = c;
        } else {
            num = f.add(f.mul(a, z), b);
            den = f.add(f.mul(c, z), d);
        }
        img[z] = static_cast<std::uint8_t>(den == 0 ? inf : f.mul(num, f.inv(den)));
    }
    Perm p(std::move(img));
    if (!p.is_valid()) throw ValidationError("moebius_perm: not a permutation");
    return p;
}

Perm frobenius_perm(const GF2e& f) {
    std::vector<std::uint8_t> img(f.q + 1);
    for (int z = 0; z < f.q; ++z) img[z] = static_cast<std::uint8_t>(f.frobenius(z));
    img[f.q] = static_cast<std::uint8_t>(f.q);
    return Perm(std::move(img));
}

ActionGroup build_T(int ell) {
    GF2e f(ell);
    std::vector<Perm> gens;
    for (int i = 0; i < ell; ++i) gens.push_back(moebius_perm(f, 1, 1 << i, 0, 1));
    return ActionGroup::generate(projective_points(f), std::move(gens));
}

ActionGroup build_U(int ell) {
    GF2e f(ell);
    std::vector<Perm> gens;
    for (int i = 0; i < ell; ++i) gens.push_back(moebius_perm(f, 1, 1 << i, 0, 1));
    // a primitive element t scales via diag(t, t^{-1})
    gens.push_back(moebius_perm(f, 2, 0, 0, f.inv(2)));
    return ActionGroup::generate(projective_points(f), std::move(gens));
}

ActionGroup build_SL2(int ell) {
    GF2e f(ell);
    std::vector<Perm> gens;
    for (int i = 0; i < ell; ++i) gens.push_back(moebius_perm(f, 1, 1 << i, 0, 1));
    gens.push_back(moebius_perm(f, 0, 1, 1, 0));
    return ActionGroup::generate(projective_points(f), std::move(gens));
}

ActionGroup build_PGammaL2(int ell) {
    GF2e f(ell);
    std::vector<Perm> gens;
    for (int i = 0; i < ell; ++i) gens.push_back(moebius_perm(f, 1, 1 << i, 0, 1));
    gens.push_back(moebius_perm(f, 0, 1, 1, 0));
    gens.push_back(frobenius_perm(f));
    return ActionGroup::generate(projective_points(f), std::move(gens));
}

namespace {
Perm rotation_perm(int k) {
    std::vector<std::uint8_t> img(k);
    for (int x = 0; x < k; ++x) img[x] = static_cast<std::uint8_t>(mod(x + 1, k));
    return Perm(std::move(img));
}
}  // namespace

ActionGroup cyclic_regular(int k) { return ActionGroup::generate(k, {rotation_perm(k)}); }

ActionGroup dihedral_on_zk(int k) {
    std::vector<std::uint8_t> neg(k);
    for (int x = 0; x < k; ++x) neg[x] = static_cast<std::uint8_t>(mod(-x, k));
    return ActionGroup::generate(k, {rotation_perm(k), Perm(std::move(neg))});
}

ActionGroup symmetric_natural(int k) {
    std::vector<std::uint8_t> swap01(k);
    for (int x = 0; x < k; ++x) swap01[x] = static_cast<std::uint8_t>(x);
    std::swap(swap01[0], swap01[1]);
    return ActionGroup::generate(k, {rotation_perm(k), Perm(std::move(swap01))});
}

ActionGroup alternating_natural(int k) {
    std::vector<Perm> gens;
    for (int x = 0; x < k; ++x) {
        std::vector<std::uint8_t> img(k);
        for (int i = 0; i < k; ++i) img[i] = static_cast<std::uint8_t>(i);
        // 3-cycle (x, x+1, x+2)
        img[x] = static_cast<std::uint8_t>(mod(x + 1, k));
        img[mod(x + 1, k)] = static_cast<std::uint8_t>(mod(x + 2, k));
        img[mod(x + 2, k)] = static_cast<std::uint8_t>(x);
        gens.push_back(Perm(std::move(img)));
    }
    return ActionGroup::generate(k, std::move(gens));
}

}  // namespace circstab
