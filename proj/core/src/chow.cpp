#include "chowkit/chow.hpp"

#include <utility>

namespace chowkit {

TruncPoly::TruncPoly(int n, IntVec c) : n(n), coeffs(std::move(c)) {
    if (n < 0) throw value_error("truncpoly: negative truncation degree");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw dimension_error("truncpoly: coefficient count must be n + 1");
}

TruncPoly TruncPoly::one(int n) {
    IntVec c(n + 1);
    c[0] = 1;
    return TruncPoly(n, std::move(c));
}

TruncPoly TruncPoly::zero(int n) { return TruncPoly(n, IntVec(n + 1)); }

namespace {

void check_same_truncation(const TruncPoly& a, const TruncPoly& b) {
    if (a.n != b.n)
        throw dimension_error("truncpoly: operands have different truncation degrees");
}

} // namespace

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    check_same_truncation(a, b);
    TruncPoly r = a;
    for (int i = 0; i <= a.n; ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
    check_same_truncation(a, b);
    TruncPoly r = a;
    for (int i = 0; i <= a.n; ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    check_same_truncation(a, b);
    TruncPoly r = TruncPoly::zero(a.n);
    for (int i = 0; i <= a.n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= a.n; ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

TruncPoly series_inverse(const TruncPoly& a) {
    const Int& a0 = a.coeffs[0];
    if (a0 != 1 && a0 != -1)
        throw value_error("series inverse: constant term must be a unit");
    TruncPoly b = TruncPoly::zero(a.n);
    b.coeffs[0] = a0; // 1/a0 = a0 for a0 = +-1
    for (int k = 1; k <= a.n; ++k) {
        Int acc = 0;
        for (int j = 1; j <= k; ++j) acc += a.coeffs[j] * b.coeffs[k - j];
        b.coeffs[k] = -a0 * acc;
    }
    return b;
}

TruncPoly truncpoly_pow(const TruncPoly& a, const Int& e) {
    TruncPoly base = e < 0 ? series_inverse(a) : a;
    Int k = abs_int(e);
    TruncPoly r = TruncPoly::one(a.n);
    while (k > 0) {
        if ((k & 1) != 0) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

TruncPoly total_chern(const KClass& a) {
    TruncPoly c = TruncPoly::one(a.n);
    for (int i = 0; i <= a.n; ++i) {
        if (a.coeffs[i] == 0) continue;
        TruncPoly line = TruncPoly::one(a.n);
        if (a.n >= 1) line.coeffs[1] = -i;
        c = c * truncpoly_pow(line, a.coeffs[i]);
    }
    return c;
}

Int chern_component(int i, const KClass& a) {
    if (i < 0 || i > a.n)
        throw value_error("chern component: index outside [0, n]");
    return total_chern(a).coeffs[i];
}

KClass pi_map(int i, const Int& a, int n) {
    if (i < 1 || i > n)
        throw value_error("pi map: codimension outside [1, n]");
    return a * sigma_power(i, n);
}

ChowQuotientModel::ChowQuotientModel(int n_, IntVec moduli_, std::string prov)
    : n(n_), moduli(std::move(moduli_)), provenance(std::move(prov)) {
    if (n < 0) throw value_error("quotient model: negative dimension");
    if (moduli.size() != static_cast<std::size_t>(n))
        throw dimension_error("quotient model: need one modulus per degree 1..n");
    for (const Int& m : moduli)
        if (m < 0) throw value_error("quotient model: moduli must be nonnegative");
}

ChowQuotientModel hypersurface_complement_model(const Int& delta) {
    if (delta < 1)
        throw value_error("complement model: hypersurface degree must be >= 1");
    return ChowQuotientModel(
        3, {delta, delta, Int(2)},
        "moduli (delta, delta, 2) for the complement of a smooth degree-delta "
        "hypersurface in projective 3-space; recorded as a model input, not "
        "re-derived here");
}

IntVec chern_in_quotient(const TruncPoly& c, const ChowQuotientModel& m) {
    if (c.n != m.n)
        throw dimension_error("quotient residues: degree mismatch with model");
    IntVec r(m.n);
    for (int i = 1; i <= m.n; ++i) {
        const Int& q = m.moduli[i - 1];
        r[i - 1] = q == 0 ? c.coeffs[i] : floor_mod(c.coeffs[i], q);
    }
    return r;
}

} // namespace chowkit
