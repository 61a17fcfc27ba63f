#include "chowkit/kzero.hpp"

namespace chowkit {

namespace {

void check_same_space(const KClass& a, const KClass& b) {
    if (a.n != b.n)
        throw dimension_error("kclass: operands live on different projective spaces");
}

// C(top, k) for integer top of either sign (generalized binomial).
Int binom(const Int& top, int k) {
    Int num = 1;
    for (int j = 0; j < k; ++j) num *= top - j;
    Int den = 1;
    for (int j = 2; j <= k; ++j) den *= j;
    return num / den;
}

} // namespace

KClass::KClass(int n, IntVec c) : n(n), coeffs(std::move(c)) {
    if (n < 0) throw value_error("kclass: negative dimension");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw dimension_error("kclass: coefficient count must be n + 1");
}

KClass KClass::zero(int n) { return KClass(n, IntVec(n + 1)); }

KClass KClass::unit(int n) {
    IntVec c(n + 1);
    c[0] = 1;
    return KClass(n, std::move(c));
}

IntVec to_sigma_coords(const KClass& a) {
    // sigma^k coefficient of sum c_i (1 - sigma)^i.
    IntVec s(a.n + 1);
    for (int k = 0; k <= a.n; ++k) {
        Int acc = 0;
        for (int i = 0; i <= a.n; ++i) acc += a.coeffs[i] * binom(i, k);
        s[k] = (k % 2 == 0) ? acc : Int(-acc);
    }
    return s;
}

KClass from_sigma_coords(int n, const IntVec& s) {
    if (s.size() != static_cast<std::size_t>(n) + 1)
        throw dimension_error("kclass: sigma coordinate count must be n + 1");
    IntVec c(n + 1);
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int k = 0; k <= n; ++k) acc += s[k] * binom(k, i);
        c[i] = (i % 2 == 0) ? acc : Int(-acc);
    }
    return KClass(n, std::move(c));
}

KClass operator+(const KClass& a, const KClass& b) {
    check_same_space(a, b);
    KClass r = a;
    for (int i = 0; i <= a.n; ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

KClass operator-(const KClass& a, const KClass& b) {
    check_same_space(a, b);
    KClass r = a;
    for (int i = 0; i <= a.n; ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

KClass operator-(const KClass& a) {
    KClass r = a;
    for (Int& c : r.coeffs) c = -c;
    return r;
}

KClass operator*(const Int& s, const KClass& a) {
    KClass r = a;
    for (Int& c : r.coeffs) c *= s;
    return r;
}

KClass operator*(const KClass& a, const KClass& b) {
    check_same_space(a, b);
    const IntVec sa = to_sigma_coords(a), sb = to_sigma_coords(b);
    IntVec prod(a.n + 1);
    for (int i = 0; i <= a.n; ++i) {
        if (sa[i] == 0) continue;
        for (int j = 0; i + j <= a.n; ++j) prod[i + j] += sa[i] * sb[j];
    }
    return from_sigma_coords(a.n, prod);
}

KClass mul(const KClass& a, const KClass& b) { return a * b; }

Int rank(const KClass& a) {
    Int r = 0;
    for (const Int& c : a.coeffs) r += c;
    return r;
}

KClass sigma_power(int i, int n) {
    if (i < 0) throw value_error("sigma power: negative exponent");
    if (n < 0) throw value_error("sigma power: negative dimension");
    IntVec s(n + 1);
    if (i <= n) s[i] = 1;
    return from_sigma_coords(n, s);
}

KClass line_bundle_class(const Int& m, int n) {
    if (n < 0) throw value_error("line bundle: negative dimension");
    // (1 - sigma)^(-m): sigma^k coefficient is (-1)^k C(-m, k).
    IntVec s(n + 1);
    for (int k = 0; k <= n; ++k) {
        const Int b = binom(-m, k);
        s[k] = (k % 2 == 0) ? b : Int(-b);
    }
    return from_sigma_coords(n, s);
}

std::vector<KClass> hypersurface_pushforward_generators(const Int& delta) {
    if (delta < 0)
        throw value_error("pushforward generators: degree must be nonnegative");
    const int n = 3;
    std::vector<KClass> gens;
    gens.push_back(line_bundle_class(0, n) - line_bundle_class(-delta, n));
    gens.push_back(line_bundle_class(-1, n) - line_bundle_class(-delta - 1, n));
    gens.push_back(Int(2) * sigma_power(3, n));
    return gens;
}

KClass aux_rank2_class() { return KClass(3, {0, 5, -4, 1}); }

KClass restricted_bundle_class(const Int& delta) {
    if (delta < 0)
        throw value_error("restricted class: degree must be nonnegative");
    return delta * aux_rank2_class() - (2 * (delta - 1)) * KClass::unit(3);
}

} // namespace chowkit
