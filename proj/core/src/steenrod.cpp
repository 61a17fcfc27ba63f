#include "chowkit/steenrod.hpp"

#include <algorithm>

namespace chowkit {

F2Class operator+(const F2Class& a, const F2Class& b) {
    if (a.degree != b.degree || a.coords.size() != b.coords.size())
        throw degree_error("f2 sum: classes live in different degrees");
    F2Class r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] ^= b.coords[i];
    return r;
}

F2GradedAlg::F2GradedAlg(int max_degree,
                         std::vector<std::vector<std::string>> basis,
                         std::vector<F2CupEntry> cup,
                         std::vector<F2SqEntry> sq)
    : max_degree_(max_degree),
      basis_(std::move(basis)),
      cup_entries_(std::move(cup)),
      sq_entries_(std::move(sq)) {
    if (max_degree_ < 1)
        throw value_error("algebra: max degree must be at least 1");
    if (basis_.size() != static_cast<std::size_t>(max_degree_))
        throw dimension_error("algebra: need one basis list per degree 1..max_degree");
    for (int d = 1; d <= max_degree_; ++d)
        for (std::size_t i = 0; i < basis_[d - 1].size(); ++i) {
            const std::string& label = basis_[d - 1][i];
            if (label.empty())
                throw input_error("algebra: empty basis label");
            if (!label_index_.emplace(label, Loc{d, i}).second)
                throw input_error("algebra: duplicate basis label '" + label + "'");
        }

    cup_.assign(max_degree_, {});
    for (int p = 1; p <= max_degree_; ++p) {
        cup_[p - 1].assign(max_degree_, {});
        for (int q = 1; p + q <= max_degree_; ++q)
            cup_[p - 1][q - 1].assign(dim(p) * dim(q),
                                      std::vector<std::uint8_t>(dim(p + q)));
    }
    sq_.assign(max_degree_, {});
    for (int p = 1; p <= max_degree_; ++p)
        sq_[p - 1].assign(dim(p), std::vector<std::uint8_t>(
                                      p + 1 <= max_degree_ ? dim(p + 1) : 0));

    for (const F2CupEntry& e : cup_entries_) {
        const Loc l = locate(e.left), r = locate(e.right);
        if (l.degree + r.degree > max_degree_)
            throw input_error("algebra: cup entry '" + e.left + "' * '" + e.right +
                              "' lands beyond the top degree");
        cup_[l.degree - 1][r.degree - 1][l.index * dim(r.degree) + r.index] =
            bits_from_labels(l.degree + r.degree, e.value);
    }
    for (const F2SqEntry& e : sq_entries_) {
        const Loc l = locate(e.on);
        if (l.degree + 1 > max_degree_) {
            if (!e.value.empty())
                throw input_error("algebra: sq entry on '" + e.on +
                                  "' lands beyond the top degree");
            continue;
        }
        sq_[l.degree - 1][l.index] = bits_from_labels(l.degree + 1, e.value);
    }
}

std::size_t F2GradedAlg::dim(int degree) const {
    if (degree == max_degree_ + 1) return 0;
    if (degree < 1 || degree > max_degree_)
        throw degree_error("algebra: degree outside 1..max_degree");
    return basis_[degree - 1].size();
}

const std::vector<std::string>& F2GradedAlg::basis(int degree) const {
    if (degree < 1 || degree > max_degree_)
        throw degree_error("algebra: degree outside 1..max_degree");
    return basis_[degree - 1];
}

F2GradedAlg::Loc F2GradedAlg::locate(const std::string& label) const {
    const auto it = label_index_.find(label);
    if (it == label_index_.end())
        throw input_error("algebra: unknown label '" + label + "'");
    return it->second;
}

std::vector<std::uint8_t>
F2GradedAlg::bits_from_labels(int degree, const std::vector<std::string>& labels) const {
    std::vector<std::uint8_t> bits(dim(degree));
    for (const std::string& l : labels) {
        const Loc loc = locate(l);
        if (loc.degree != degree)
            throw input_error("algebra: label '" + l + "' has degree " +
                              std::to_string(loc.degree) + ", expected " +
                              std::to_string(degree));
        bits[loc.index] ^= 1;
    }
    return bits;
}

void F2GradedAlg::check_class(const F2Class& x, int max_allowed) const {
    if (x.degree < 1 || x.degree > max_allowed)
        throw degree_error("algebra: class degree out of range");
    const std::size_t want = x.degree <= max_degree_ ? dim(x.degree) : 0;
    if (x.coords.size() != want)
        throw dimension_error("algebra: class coordinate count does not match basis");
}

F2Class F2GradedAlg::zero_class(int degree) const {
    if (degree < 1 || degree > max_degree_ + 1)
        throw degree_error("algebra: class degree out of range");
    const std::size_t d = degree <= max_degree_ ? dim(degree) : 0;
    return F2Class{degree, std::vector<std::uint8_t>(d)};
}

F2Class F2GradedAlg::basis_class(const std::string& label) const {
    const Loc l = locate(label);
    F2Class c = zero_class(l.degree);
    c.coords[l.index] = 1;
    return c;
}

F2Class F2GradedAlg::class_from_labels(int degree,
                                       const std::vector<std::string>& labels) const {
    if (degree < 1 || degree > max_degree_ + 1)
        throw degree_error("algebra: class degree out of range");
    if (degree == max_degree_ + 1) {
        if (!labels.empty())
            throw input_error("algebra: no basis beyond the top degree");
        return zero_class(degree);
    }
    return F2Class{degree, bits_from_labels(degree, labels)};
}

F2Class F2GradedAlg::cup(const F2Class& x, const F2Class& y) const {
    check_class(x, max_degree_);
    check_class(y, max_degree_);
    if (x.degree + y.degree > max_degree_)
        throw degree_error("cup: product degree exceeds max_degree");
    F2Class r = zero_class(x.degree + y.degree);
    const std::size_t dq = dim(y.degree);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (!x.coords[i]) continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j) {
            if (!y.coords[j]) continue;
            const auto& bits = cup_[x.degree - 1][y.degree - 1][i * dq + j];
            for (std::size_t k = 0; k < bits.size(); ++k) r.coords[k] ^= bits[k];
        }
    }
    return r;
}

F2Class F2GradedAlg::sq(const F2Class& x) const {
    check_class(x, max_degree_);
    F2Class r = zero_class(x.degree + 1);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (!x.coords[i]) continue;
        const auto& bits = sq_[x.degree - 1][i];
        for (std::size_t k = 0; k < bits.size(); ++k) r.coords[k] ^= bits[k];
    }
    return r;
}

F2Class F2GradedAlg::twisted_sq(const F2Class& w, const F2Class& x) const {
    check_class(w, max_degree_);
    check_class(x, max_degree_);
    if (w.degree != 1)
        throw degree_error("twisted sq: twist must have degree 1");
    if (x.degree + 1 > max_degree_) return zero_class(x.degree + 1);
    return sq(x) + cup(w, x);
}

F2Class F2GradedAlg::rank3_obstruction(const F2Class& a1, const F2Class& a2,
                                       const F2Class& a3) const {
    if (max_degree_ < 3)
        throw degree_error("obstruction: algebra must reach degree 3");
    if (a1.degree != 1 || a2.degree != 2 || a3.degree != 3)
        throw degree_error("obstruction: classes must have degrees 1, 2, 3");
    return a3 + cup(a1, a2) + sq(a2);
}

F2Class F2GradedAlg::rank2_criterion(const F2Class& a1, const F2Class& a2) const {
    if (a1.degree != 1 || a2.degree != 2)
        throw degree_error("criterion: classes must have degrees 1, 2");
    return twisted_sq(a1, a2);
}

std::vector<F2Violation> F2GradedAlg::validate() const {
    std::vector<F2Violation> out;
    auto basis_name = [&](int d, std::size_t i) { return basis_[d - 1][i]; };

    // Commutativity (mod 2, so no signs).
    for (int p = 1; p <= max_degree_; ++p)
        for (int q = p; p + q <= max_degree_; ++q)
            for (std::size_t i = 0; i < dim(p); ++i)
                for (std::size_t j = 0; j < dim(q); ++j) {
                    F2Class x = basis_class(basis_name(p, i));
                    F2Class y = basis_class(basis_name(q, j));
                    if (!(cup(x, y) == cup(y, x)))
                        out.push_back({"commutativity",
                                       basis_name(p, i) + " * " + basis_name(q, j) +
                                           " != " + basis_name(q, j) + " * " +
                                           basis_name(p, i)});
                }

    // Associativity on basis triples whose total degree stays in range.
    for (int p = 1; p <= max_degree_; ++p)
        for (int q = 1; p + q < max_degree_; ++q)
            for (int r = 1; p + q + r <= max_degree_; ++r)
                for (std::size_t i = 0; i < dim(p); ++i)
                    for (std::size_t j = 0; j < dim(q); ++j)
                        for (std::size_t k = 0; k < dim(r); ++k) {
                            F2Class x = basis_class(basis_name(p, i));
                            F2Class y = basis_class(basis_name(q, j));
                            F2Class z = basis_class(basis_name(r, k));
                            if (!(cup(cup(x, y), z) == cup(x, cup(y, z))))
                                out.push_back(
                                    {"associativity",
                                     "(" + basis_name(p, i) + " * " + basis_name(q, j) +
                                         ") * " + basis_name(r, k) + " != " +
                                         basis_name(p, i) + " * (" + basis_name(q, j) +
                                         " * " + basis_name(r, k) + ")"});
                        }

    // Derivation rule, wherever the product of the squares stays in range.
    for (int p = 1; p <= max_degree_; ++p)
        for (int q = 1; p + q + 1 <= max_degree_; ++q)
            for (std::size_t i = 0; i < dim(p); ++i)
                for (std::size_t j = 0; j < dim(q); ++j) {
                    F2Class x = basis_class(basis_name(p, i));
                    F2Class y = basis_class(basis_name(q, j));
                    const F2Class lhs = sq(cup(x, y));
                    const F2Class rhs = cup(sq(x), y) + cup(x, sq(y));
                    if (!(lhs == rhs))
                        out.push_back({"derivation",
                                       "sq(" + basis_name(p, i) + " * " +
                                           basis_name(q, j) + ") breaks the Leibniz rule"});
                }

    // sq composed with itself vanishes where both steps stay in range.
    for (int p = 1; p + 2 <= max_degree_; ++p)
        for (std::size_t i = 0; i < dim(p); ++i) {
            if (!sq(sq(basis_class(basis_name(p, i)))).is_zero())
                out.push_back({"square-vanishes",
                               "sq(sq(" + basis_name(p, i) + ")) != 0"});
        }

    // In degree 1 the square is the cup square.
    if (max_degree_ >= 2)
        for (std::size_t i = 0; i < dim(1); ++i) {
            F2Class x = basis_class(basis_name(1, i));
            if (!(sq(x) == cup(x, x)))
                out.push_back({"degree-one-square",
                               "sq(" + basis_name(1, i) + ") != " +
                                   basis_name(1, i) + "^2"});
        }

    return out;
}

} // namespace chowkit
