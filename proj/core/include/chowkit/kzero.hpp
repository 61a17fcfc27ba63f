#pragma once

#include "chowkit/bigint.hpp"
#include "chowkit/errors.hpp"

#include <vector>

namespace chowkit {

// Virtual class in the Grothendieck ring of projective n-space, written in
// the basis [O], [O(-1)], ..., [O(-n)]. coeffs[i] multiplies [O(-i)].
//
// Internally products go through coordinates in sigma = [O] - [O(-1)], which
// is nilpotent: sigma^(n+1) = 0.
struct KClass {
    int n = 0;
    IntVec coeffs;

    KClass() : coeffs(1) {}
    KClass(int n, IntVec coeffs);

    static KClass zero(int n);
    static KClass unit(int n); // [O]

    bool operator==(const KClass&) const = default;
};

KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator-(const KClass& a);
KClass operator*(const KClass& a, const KClass& b);
KClass operator*(const Int& s, const KClass& a);

// [O(m)] for any integer m (positive twists expand through the relation
// sigma^(n+1) = 0).
KClass line_bundle_class(const Int& m, int n);

KClass mul(const KClass& a, const KClass& b);

// Virtual rank: the image under sigma -> 0, i.e. the coefficient sum.
Int rank(const KClass& a);

// a * sigma^i; i may be 0..n, and any i > n gives the zero class.
KClass sigma_power(int i, int n);

// Change of basis to sigma coordinates and back; both directions are the
// same signed binomial transform.
IntVec to_sigma_coords(const KClass& a);
KClass from_sigma_coords(int n, const IntVec& s);

// Generators of the classes on projective 3-space that extend across the
// complement of a degree-delta hypersurface: [O] - [O(-delta)],
// [O(-1)] - [O(-delta-1)], and twice the top sigma power. delta >= 0.
std::vector<KClass> hypersurface_pushforward_generators(const Int& delta);

// The rank-2 combination 5[O(-1)] - 4[O(-2)] + [O(-3)] on projective
// 3-space; its total Chern class is 1 + h^2.
KClass aux_rank2_class();

// delta * aux - 2(delta - 1) * [O]: the rank-2 class restricted to the
// hypersurface complement in the stable-triviality scenario.
KClass restricted_bundle_class(const Int& delta);

} // namespace chowkit
