#include "chowkit/abgroup.hpp"

#include <utility>

namespace chowkit {

namespace {

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols())
        throw dimension_error("vstack: column counts differ");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

IntMatrix take_cols(const IntMatrix& m, std::size_t from, std::size_t count) {
    IntMatrix out(m.rows(), count);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = m(i, from + j);
    return out;
}

IntMatrix ensure_width(const IntMatrix& rel, std::size_t n) {
    if (rel.rows() == 0) return IntMatrix(0, n);
    return rel;
}

// Relation matrix for the subgroup generated by the rows of g inside
// Z^n / rowspan(r): every integer row a with a*g in rowspan(r), read off by
// projecting the left kernel of [g; r].
IntMatrix sub_relations(const IntMatrix& g, const IntMatrix& r) {
    const IntMatrix stacked = vstack(g, ensure_width(r, g.cols()));
    const IntMatrix l = left_kernel(stacked);
    return take_cols(l, 0, g.rows());
}

bool in_rowspan(const IntVec& x, const IntMatrix& r) {
    return solve_integer(r.transpose(), x).has_value();
}

} // namespace

FpAbGroup::FpAbGroup(std::size_t n_gens, IntMatrix relations)
    : n_(n_gens), rel_(ensure_width(std::move(relations), n_gens)) {
    if (rel_.cols() != n_)
        throw dimension_error("group: relation width does not match generator count");
    const SmithForm f = smith_normal_form(rel_);
    const std::size_t k = std::min(rel_.rows(), n_);
    diag_.assign(n_, Int(0));
    for (std::size_t i = 0; i < k; ++i) diag_[i] = f.s(i, i);
    for (const Int& d : diag_) {
        if (d == 0) ++free_rank_;
        if (d > 1) torsion_.push_back(d);
    }
    v_ = f.v;
    v_inv_ = inverse_unimodular(f.v);
}

FpAbGroup FpAbGroup::free_group(std::size_t rank) { return FpAbGroup(rank); }

FpAbGroup FpAbGroup::cyclic(const Int& n) {
    if (n < 0) throw value_error("cyclic: order must be nonnegative");
    if (n == 0) return FpAbGroup(1);
    return FpAbGroup(1, IntMatrix::from_rows({{n}}));
}

IntVec FpAbGroup::canonical_form(const IntVec& x) const {
    if (x.size() != n_)
        throw dimension_error("group: element length does not match generator count");
    IntVec z = vecmat(x, v_);
    for (std::size_t i = 0; i < n_; ++i)
        if (diag_[i] > 0) z[i] = floor_mod(z[i], diag_[i]);
    return z;
}

bool FpAbGroup::element_equal(const IntVec& x, const IntVec& y) const {
    return canonical_form(x) == canonical_form(y);
}

bool FpAbGroup::is_zero_element(const IntVec& x) const {
    for (const Int& c : canonical_form(x))
        if (c != 0) return false;
    return true;
}

Int FpAbGroup::order() const {
    if (!is_finite()) throw value_error("order: group is infinite");
    Int n = 1;
    for (const Int& d : diag_) n *= d;
    return n;
}

IntVec FpAbGroup::coordinate_representative(std::size_t i) const {
    if (i >= n_) throw dimension_error("group: coordinate index out of range");
    return v_inv_.row(i);
}

std::vector<IntVec> FpAbGroup::elements() const {
    if (!is_finite())
        throw value_error("elements: group is infinite");
    if (order() > 1000000)
        throw value_error("elements: order exceeds enumeration bound");
    std::vector<IntVec> out;
    IntVec z(n_);
    for (;;) {
        out.push_back(vecmat(z, v_inv_));
        std::size_t i = 0;
        while (i < n_ && z[i] + 1 == diag_[i]) z[i++] = 0;
        if (i == n_) break;
        ++z[i];
    }
    return out;
}

InvariantFactors invariant_factors(const FpAbGroup& g) {
    return InvariantFactors{g.free_rank(), g.torsion()};
}

AbHom::AbHom(FpAbGroup source, FpAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 && source_.n_gens() == 0)
        matrix_ = IntMatrix(0, target_.n_gens());
    if (matrix_.rows() != source_.n_gens() || matrix_.cols() != target_.n_gens())
        throw dimension_error("hom: matrix shape does not match generator counts");
    for (std::size_t i = 0; i < source_.relations().rows(); ++i) {
        const IntVec image = vecmat(source_.relations().row(i), matrix_);
        if (!in_rowspan(image, target_.relations()))
            throw hom_error("hom: image of a relation is not a relation");
    }
}

AbHom AbHom::zero(FpAbGroup source, FpAbGroup target) {
    IntMatrix m(source.n_gens(), target.n_gens());
    return AbHom(std::move(source), std::move(target), std::move(m));
}

AbHom AbHom::identity(FpAbGroup g) {
    IntMatrix m = IntMatrix::identity(g.n_gens());
    FpAbGroup h = g;
    return AbHom(std::move(g), std::move(h), std::move(m));
}

IntVec AbHom::apply(const IntVec& x) const {
    if (x.size() != source_.n_gens())
        throw dimension_error("hom: element length does not match source");
    return vecmat(x, matrix_);
}

SubgroupResult subgroup(const IntMatrix& gens_rows, const FpAbGroup& ambient) {
    const IntMatrix g = ensure_width(gens_rows, ambient.n_gens());
    if (g.cols() != ambient.n_gens())
        throw dimension_error("subgroup: generator width does not match ambient group");
    FpAbGroup grp(g.rows(), sub_relations(g, ambient.relations()));
    AbHom incl(grp, ambient, g);
    return SubgroupResult{std::move(grp), std::move(incl)};
}

KernelResult kernel(const AbHom& f) {
    const std::size_t na = f.source().n_gens();
    const IntMatrix stacked = vstack(f.matrix(), f.target().relations());
    const IntMatrix gens = take_cols(left_kernel(stacked), 0, na);
    SubgroupResult s = subgroup(gens, f.source());
    return KernelResult{std::move(s.group), std::move(s.inclusion)};
}

FpAbGroup cokernel(const AbHom& f) {
    return FpAbGroup(f.target().n_gens(),
                     vstack(f.target().relations(), f.matrix()));
}

FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b) {
    const std::size_t n = a.n_gens() + b.n_gens();
    const std::size_t ra = a.relations().rows(), rb = b.relations().rows();
    IntMatrix rel(ra + rb, n);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < a.n_gens(); ++j)
            rel(i, j) = a.relations()(i, j);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < b.n_gens(); ++j)
            rel(ra + i, a.n_gens() + j) = b.relations()(i, j);
    return FpAbGroup(n, std::move(rel));
}

PullbackResult pullback(const AbHom& f, const AbHom& g) {
    if (!(f.target() == g.target()))
        throw hom_error("pullback: legs have different targets");
    const std::size_t na = f.source().n_gens();
    const std::size_t nb = g.source().n_gens();

    IntMatrix neg = g.matrix();
    for (std::size_t i = 0; i < neg.rows(); ++i)
        for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);

    const IntMatrix stacked =
        vstack(vstack(f.matrix(), neg), f.target().relations());
    const IntMatrix gens = take_cols(left_kernel(stacked), 0, na + nb);

    const FpAbGroup amb = direct_sum(f.source(), g.source());
    FpAbGroup grp(gens.rows(), sub_relations(gens, amb.relations()));
    AbHom to_left(grp, f.source(), take_cols(gens, 0, na));
    AbHom to_right(grp, g.source(), take_cols(gens, na, nb));
    return PullbackResult{std::move(grp), std::move(to_left), std::move(to_right)};
}

SubgroupResult torsion_subgroup(const FpAbGroup& g) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < g.n_gens(); ++i)
        if (g.coordinate_moduli()[i] > 1)
            rows.push_back(g.coordinate_representative(i));
    IntMatrix gens = rows.empty() ? IntMatrix(0, g.n_gens())
                                  : IntMatrix::from_rows(rows);
    return subgroup(gens, g);
}

Mod2Reduction mod2_reduction(const FpAbGroup& g) {
    IntMatrix twice = IntMatrix::identity(g.n_gens());
    for (std::size_t i = 0; i < g.n_gens(); ++i) twice(i, i) = 2;
    FpAbGroup red(g.n_gens(), vstack(g.relations(), twice));
    std::size_t dim = g.free_rank();
    for (const Int& d : g.torsion())
        if ((d & 1) == 0) ++dim;
    return Mod2Reduction{std::move(red), dim};
}

} // namespace chowkit
