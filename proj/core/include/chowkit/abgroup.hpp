#pragma once

#include "chowkit/intlat.hpp"

#include <vector>

namespace chowkit {

// Finitely presented abelian group Z^n / rowspan(relations). Relation rows
// live in Z^n. Immutable; the Smith decomposition of the relation matrix is
// taken once at construction, so equality of cosets, invariant factors and
// enumeration all read from the same normal form.
class FpAbGroup {
public:
    // An empty relation matrix presents the free group Z^n.
    explicit FpAbGroup(std::size_t n_gens, IntMatrix relations = IntMatrix());

    static FpAbGroup free_group(std::size_t rank);
    // Z/n for n >= 1, Z for n = 0.
    static FpAbGroup cyclic(const Int& n);

    std::size_t n_gens() const { return n_; }
    const IntMatrix& relations() const { return rel_; }

    std::size_t free_rank() const { return free_rank_; }
    // Invariant factors > 1, each dividing the next.
    const IntVec& torsion() const { return torsion_; }

    // Canonical coordinates of the coset of x; two vectors represent the same
    // element iff their canonical forms agree.
    IntVec canonical_form(const IntVec& x) const;
    bool element_equal(const IntVec& x, const IntVec& y) const;
    bool is_zero_element(const IntVec& x) const;

    bool is_finite() const { return free_rank_ == 0; }
    // Throws value_error on infinite groups.
    Int order() const;

    // Modulus of each canonical coordinate; 0 marks a free coordinate.
    const IntVec& coordinate_moduli() const { return diag_; }
    // Representative (in generator coordinates) of the i-th canonical basis
    // vector.
    IntVec coordinate_representative(std::size_t i) const;

    // One representative per element, in generator coordinates. Guarded:
    // throws value_error when the group is infinite or has order > 10^6.
    std::vector<IntVec> elements() const;

    // Structural identity of presentations, not isomorphism.
    bool operator==(const FpAbGroup& o) const {
        return n_ == o.n_ && rel_ == o.rel_;
    }

private:
    std::size_t n_ = 0;
    IntMatrix rel_;
    std::size_t free_rank_ = 0;
    IntVec torsion_;
    IntVec diag_;
    IntMatrix v_, v_inv_;
};

struct InvariantFactors {
    std::size_t free_rank = 0;
    IntVec torsion;
    bool operator==(const InvariantFactors&) const = default;
};

InvariantFactors invariant_factors(const FpAbGroup& g);

// Homomorphism between presented groups, acting on row vectors: x -> x * M.
// Row i of M is the image of generator i. Construction verifies that every
// source relation lands in the target's relation span.
class AbHom {
public:
    AbHom(FpAbGroup source, FpAbGroup target, IntMatrix matrix);

    static AbHom zero(FpAbGroup source, FpAbGroup target);
    static AbHom identity(FpAbGroup g);

    const FpAbGroup& source() const { return source_; }
    const FpAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVec apply(const IntVec& x) const;

private:
    FpAbGroup source_, target_;
    IntMatrix matrix_;
};

// A subgroup presented on its own generators, with the inclusion into the
// ambient group.
struct SubgroupResult {
    FpAbGroup group;
    AbHom inclusion;
};

// Subgroup of `ambient` generated by the rows of gens_rows (generator
// coordinates of the ambient group).
SubgroupResult subgroup(const IntMatrix& gens_rows, const FpAbGroup& ambient);

struct KernelResult {
    FpAbGroup group;
    AbHom inclusion;
};

KernelResult kernel(const AbHom& f);

FpAbGroup cokernel(const AbHom& f);

FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b);

// Fibre product of f: A -> C and g: B -> C over C, with its two projections.
// Throws hom_error when the two targets are not the same presentation.
struct PullbackResult {
    FpAbGroup group;
    AbHom to_left;
    AbHom to_right;
};

PullbackResult pullback(const AbHom& f, const AbHom& g);

SubgroupResult torsion_subgroup(const FpAbGroup& g);

// g tensor Z/2, presented by adjoining 2*e_i to the relations; dimension is
// its rank as an F2 vector space.
struct Mod2Reduction {
    FpAbGroup group;
    std::size_t dimension = 0;
};

Mod2Reduction mod2_reduction(const FpAbGroup& g);

} // namespace chowkit
