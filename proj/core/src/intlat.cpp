#include "chowkit/intlat.hpp"

#include <algorithm>
#include <utility>

namespace chowkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, IntVec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw dimension_error("matrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMatrix();
    const std::size_t c = rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw dimension_error("matrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Int& IntMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw dimension_error("matrix: index out of range");
    return (*this)(i, j);
}

const Int& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw dimension_error("matrix: index out of range");
    return (*this)(i, j);
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_)
        throw dimension_error("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

IntVec matvec(const IntMatrix& a, const IntVec& x) {
    if (x.size() != a.cols())
        throw dimension_error("matvec: vector length does not match column count");
    IntVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

IntVec vecmat(const IntVec& x, const IntMatrix& a) {
    if (x.size() != a.rows())
        throw dimension_error("vecmat: vector length does not match row count");
    IntVec y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[j] += x[i] * a(i, j);
    }
    return y;
}

IntVec SmithForm::diagonal() const {
    const std::size_t n = std::min(s.rows(), s.cols());
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s(i, i);
    return d;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// row_i -= q * row_k
void row_axpy(IntMatrix& m, std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(k, j);
}

// col_j -= q * col_k
void col_axpy(IntMatrix& m, std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, k);
}

// row_i += row_k
void row_add(IntMatrix& m, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += m(k, j);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix u = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C);
    const std::size_t steps = std::min(R, C);

    for (std::size_t t = 0; t < steps; ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot: minimal |entry| in the trailing submatrix, ties broken
            // by lowest (row, col). This fixes the output completely.
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m(i, j) != 0 &&
                        (pi == R || abs_int(m(i, j)) < abs_int(m(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R) {
                exhausted = true;
                break;
            }
            if (pi != t) { swap_rows(m, t, pi); swap_rows(u, t, pi); }
            if (pj != t) { swap_cols(m, t, pj); swap_cols(v, t, pj); }
            if (m(t, t) < 0) { negate_row(m, t); negate_row(u, t); }

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m(i, t) == 0) continue;
                Int q = floor_div(m(i, t), m(t, t));
                if (q != 0) { row_axpy(m, i, t, q); row_axpy(u, i, t, q); }
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m(t, j) == 0) continue;
                Int q = floor_div(m(t, j), m(t, t));
                if (q != 0) { col_axpy(m, j, t, q); col_axpy(v, j, t, q); }
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot row and column are clear; force the divisibility chain by
            // folding in any row that still carries a non-multiple.
            bool fixed = false;
            for (std::size_t i = t + 1; i < R && !fixed; ++i)
                for (std::size_t j = t + 1; j < C && !fixed; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_add(m, t, i);
                        row_add(u, t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (exhausted) break;
    }
    return SmithForm{std::move(u), std::move(m), std::move(v)};
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw value_error("inverse: matrix not square");
    SmithForm f = smith_normal_form(m);
    if (f.s != IntMatrix::identity(m.rows()))
        throw value_error("inverse: matrix not unimodular");
    return f.v * f.u;
}

IntMatrix left_kernel(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    const std::size_t r = f.rank();
    IntMatrix k(a.rows() - r, a.rows());
    for (std::size_t i = r; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            k(i - r, j) = f.u(i, j);
    return k;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows())
        throw dimension_error("solve: right-hand side length does not match row count");
    SmithForm f = smith_normal_form(a);
    IntVec c = matvec(f.u, b);
    const std::size_t k = std::min(a.rows(), a.cols());
    IntVec y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int d = i < k ? f.s(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return matvec(f.v, y);
}

namespace {

// Smallest divisor q >= 2 of d with c % q != 0. Exists whenever c % d != 0,
// and is automatically a prime power: if q = q1*q2 with coprime proper parts
// both dividing c, then q divides c too.
Int min_obstructing_divisor(const Int& d, const Int& c) {
    IntVec divs;
    Int x = d;
    std::vector<std::pair<Int, int>> fac;
    for (Int p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        int e = 0;
        while (x % p == 0) { x /= p; ++e; }
        fac.emplace_back(p, e);
    }
    if (x > 1) fac.emplace_back(x, 1);
    divs.push_back(1);
    for (const auto& [p, e] : fac) {
        const std::size_t n = divs.size();
        Int pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    for (const Int& q : divs)
        if (q >= 2 && c % q != 0) return q;
    throw error("internal: no obstructing divisor though solve failed");
}

// Smallest q >= 2 with c % q != 0 (c != 0). Again automatically a prime power.
Int min_nondivisor(const Int& c) {
    for (Int q = 2;; ++q)
        if (c % q != 0) return q;
}

} // namespace

bool verify_certificate(const std::vector<IntVec>& gens, const IntVec& target,
                        const MembershipCertificate& cert) {
    if (cert.modulus < 2 || cert.functional.size() != target.size()) return false;
    auto dot_mod = [&](const IntVec& vec) {
        Int s = 0;
        for (std::size_t i = 0; i < vec.size(); ++i)
            s += cert.functional[i] * vec[i];
        return floor_mod(s, cert.modulus);
    };
    for (const IntVec& g : gens)
        if (dot_mod(g) != 0) return false;
    return dot_mod(target) != 0;
}

MembershipVerdict lattice_membership(const std::vector<IntVec>& gens,
                                     const IntVec& target) {
    const std::size_t n = target.size();
    for (const IntVec& g : gens)
        if (g.size() != n)
            throw dimension_error("membership: generators and target have different lengths");

    IntMatrix a(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) a(i, j) = gens[j][i];

    if (auto x = solve_integer(a, target))
        return MembershipVerdict{true, std::move(x), std::nullopt};

    SmithForm f = smith_normal_form(a);
    IntVec c = matvec(f.u, target);
    const std::size_t k = std::min(a.rows(), a.cols());

    // Each violated row of u*target yields a certificate; keep the one with
    // the smallest modulus (lowest row on ties).
    std::optional<Int> best_q;
    std::size_t best_row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int d = i < k ? f.s(i, i) : Int(0);
        std::optional<Int> q;
        if (d == 0) {
            if (c[i] != 0) q = min_nondivisor(c[i]);
        } else if (c[i] % d != 0) {
            q = min_obstructing_divisor(d, c[i]);
        }
        if (q && (!best_q || *q < *best_q)) {
            best_q = *q;
            best_row = i;
        }
    }
    if (!best_q)
        throw error("internal: solve failed but no violated row found");

    MembershipCertificate cert;
    cert.modulus = *best_q;
    cert.functional = f.u.row(best_row);
    for (Int& e : cert.functional) e = floor_mod(e, cert.modulus);
    if (!verify_certificate(gens, target, cert))
        throw error("internal: certificate failed verification");
    return MembershipVerdict{false, std::nullopt, std::move(cert)};
}

} // namespace chowkit
