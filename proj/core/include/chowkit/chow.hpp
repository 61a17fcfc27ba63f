#pragma once

#include "chowkit/kzero.hpp"

#include <string>

namespace chowkit {

// Element of Z[h] / h^(n+1); coeffs[i] multiplies h^i.
struct TruncPoly {
    int n = 0;
    IntVec coeffs;

    TruncPoly() : coeffs(1) {}
    TruncPoly(int n, IntVec coeffs);

    static TruncPoly one(int n);
    static TruncPoly zero(int n);

    bool operator==(const TruncPoly&) const = default;
};

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);

// Multiplicative inverse; requires constant term 1 or -1, else value_error.
TruncPoly series_inverse(const TruncPoly& a);

// a^e for any integer e; negative exponents go through series_inverse.
TruncPoly truncpoly_pow(const TruncPoly& a, const Int& e);

// Total Chern class of a virtual class, by Whitney multiplicativity over the
// line-bundle decomposition: c(sum c_i [O(-i)]) = prod (1 - i h)^(c_i).
TruncPoly total_chern(const KClass& a);

// Degree-i coefficient of the total Chern class; i in [0, n].
Int chern_component(int i, const KClass& a);

// a * sigma^i, the class supported in codimension >= i; i in [1, n].
KClass pi_map(int i, const Int& a, int n);

// Quotient model of the graded components in degrees 1..n: degree i is
// Z / moduli[i-1], with modulus 0 meaning no reduction. The provenance note
// travels into reports; the moduli are inputs to this toolkit, not re-proved
// by it.
struct ChowQuotientModel {
    int n = 0;
    IntVec moduli;
    std::string provenance;

    ChowQuotientModel(int n, IntVec moduli, std::string provenance = {});
};

// Model for the complement of a smooth degree-delta hypersurface in
// projective 3-space: moduli (delta, delta, 2). Requires delta >= 1.
ChowQuotientModel hypersurface_complement_model(const Int& delta);

// Residues of the degree 1..n coefficients of c in the model.
IntVec chern_in_quotient(const TruncPoly& c, const ChowQuotientModel& m);

} // namespace chowkit
