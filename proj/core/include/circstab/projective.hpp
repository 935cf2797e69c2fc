#pragma once

#include "circstab/action_group.hpp"

namespace circstab {

// GF(2^ell) for ell in {2, 3}, with the fixed irreducible polynomials
// t^2 + t + 1 and t^3 + t + 1. Elements are bit-packed polynomials.
struct GF2e {
    int ell;
    int q;

    explicit GF2e(int ell_);
    int add(int a, int b) const { return a ^ b; }
    int mul(int a, int b) const;
    int inv(int a) const;
    int frobenius(int a) const { return mul(a, a); }
};

// Projective line P^1 F_q: labels 0..q-1 for the lines [a : 1], label q
// for [1 : 0] (infinity).
inline int projective_points(const GF2e& f) { return f.q + 1; }

// Moebius action of [[a, b], [c, d]] (nonzero determinant) on the labels.
Perm moebius_perm(const GF2e& f, int a, int b, int c, int d);

// the Galois action z -> z^2 on the labels
Perm frobenius_perm(const GF2e& f);

// Subgroup families of the 2-transitive projective action:
ActionGroup build_T(int ell);          // unipotent translations, order q
ActionGroup build_U(int ell);          // upper triangular, order q(q-1)
ActionGroup build_SL2(int ell);        // = PGL_2 in characteristic 2
ActionGroup build_PGammaL2(int ell);   // SL_2 extended by Frobenius

// Cohomology test groups over Z_k:
ActionGroup cyclic_regular(int k);
ActionGroup dihedral_on_zk(int k);
ActionGroup symmetric_natural(int k);
// generated by the consecutive 3-cycles (x, x+1, x+2)
ActionGroup alternating_natural(int k);

}  // namespace circstab
