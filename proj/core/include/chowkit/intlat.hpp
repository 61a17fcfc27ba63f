#pragma once

#include "chowkit/bigint.hpp"
#include "chowkit/errors.hpp"

#include <optional>
#include <vector>

namespace chowkit {

// Dense matrix over arbitrary-precision integers, row-major.
// Value type; never overflows, never rounds.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, IntVec entries);

    // Rows must all have the same length. from_rows({}) is the 0x0 matrix.
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // Bounds-checked access; throws dimension_error.
    Int& at(std::size_t i, std::size_t j);
    const Int& at(std::size_t i, std::size_t j) const;

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;

    IntMatrix transpose() const;

    bool operator==(const IntMatrix&) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

    // Fraction-free Bareiss elimination; requires a square matrix.
    Int determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec entries_;
};

// A * x for a column vector x (|x| = cols); returns length-rows vector.
IntVec matvec(const IntMatrix& a, const IntVec& x);
// x * A for a row vector x (|x| = rows); returns length-cols vector.
IntVec vecmat(const IntVec& x, const IntMatrix& a);

// Decomposition u * a * v = s with u, v unimodular and s diagonal,
// diagonal entries nonnegative with s[i][i] | s[i+1][i+1].
//
// Deterministic: pivots are chosen by minimal absolute value, ties broken by
// lowest (row, col) lexicographically, so equal inputs yield equal outputs.
struct SmithForm {
    IntMatrix u, s, v;

    // Invariant factors including any trailing zeros, i.e. the first
    // min(rows, cols) diagonal entries of s.
    IntVec diagonal() const;
    // Number of nonzero diagonal entries.
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Inverse of a unimodular matrix (|det| = 1), computed exactly.
// Throws value_error when the matrix is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Basis (as rows) of { x : x * a = 0 }, read off the last rows of u in the
// Smith decomposition.
IntMatrix left_kernel(const IntMatrix& a);

// One integer solution x of a * x = b, or nullopt when none exists.
// b must have length a.rows().
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// Witness that no integer combination of the generators hits the target:
// functional f and modulus q >= 2 with f . gen_i == 0 (mod q) for every
// generator and f . target != 0 (mod q). The modulus is always a prime power,
// the smallest one that witnesses the obstruction.
struct MembershipCertificate {
    IntVec functional;
    Int modulus;
};

struct MembershipVerdict {
    bool member = false;
    // Present exactly when member: target = sum coefficients[i] * gens[i].
    std::optional<IntVec> coefficients;
    // Present exactly when not member; verified before return.
    std::optional<MembershipCertificate> certificate;
};

// Decides target in span_Z(gens). All generators and the target must share
// one length; gens may be empty (then member iff target = 0).
MembershipVerdict lattice_membership(const std::vector<IntVec>& gens,
                                     const IntVec& target);

// Checks a certificate against the defining congruences; used internally
// before any NonMember verdict is returned, and exposed for oracles.
bool verify_certificate(const std::vector<IntVec>& gens, const IntVec& target,
                        const MembershipCertificate& cert);

} // namespace chowkit
