#pragma once

#include "chowkit/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chowkit {

// Homogeneous class in a finite graded mod-2 algebra, as a 0/1 coordinate
// vector over the basis of its degree. A degree one past the top of the
// algebra is legal and always has an empty basis, so the only class there is
// zero; squares of top-degree classes land in it.
struct F2Class {
    int degree = 0;
    std::vector<std::uint8_t> coords;

    bool is_zero() const {
        for (auto c : coords)
            if (c) return false;
        return true;
    }
    bool operator==(const F2Class&) const = default;
};

F2Class operator+(const F2Class& a, const F2Class& b);

struct F2CupEntry {
    std::string left, right;
    std::vector<std::string> value;
};

struct F2SqEntry {
    std::string on;
    std::vector<std::string> value;
};

struct F2Violation {
    std::string rule;
    std::string detail;
};

// Graded F2 algebra supported in degrees 1..max_degree, described by a basis
// of labels per degree, a cup product table and a degree-raising square.
// Unlisted table entries are zero. Construction checks only that the data is
// well-shaped (labels exist, degrees line up); validate() checks the algebra
// laws and returns every violation it finds. Immutable once built.
class F2GradedAlg {
public:
    F2GradedAlg(int max_degree,
                std::vector<std::vector<std::string>> basis,
                std::vector<F2CupEntry> cup,
                std::vector<F2SqEntry> sq);

    int max_degree() const { return max_degree_; }
    std::size_t dim(int degree) const;
    const std::vector<std::string>& basis(int degree) const;

    // Raw table rows, kept for serialization round-trips.
    const std::vector<F2CupEntry>& cup_entries() const { return cup_entries_; }
    const std::vector<F2SqEntry>& sq_entries() const { return sq_entries_; }

    F2Class zero_class(int degree) const;
    F2Class basis_class(const std::string& label) const;
    // Sum of the listed labels; all must share one degree. An empty list is
    // only unambiguous with an explicit degree, so that overload exists too.
    F2Class class_from_labels(int degree, const std::vector<std::string>& labels) const;

    // Bilinear product. Both degrees must be in [1, max_degree] and their sum
    // must not exceed max_degree; otherwise degree_error.
    F2Class cup(const F2Class& x, const F2Class& y) const;

    // Additive degree-raising square; on top-degree classes the result is the
    // zero class one degree up.
    F2Class sq(const F2Class& x) const;

    // sq twisted by a degree-1 class: sq(x) + w cup x.
    F2Class twisted_sq(const F2Class& w, const F2Class& x) const;

    // a3 + a1 cup a2 + sq(a2) for degrees (1, 2, 3); the vanishing of this
    // class is the rank-3 realization obstruction. Needs max_degree >= 3.
    F2Class rank3_obstruction(const F2Class& a1, const F2Class& a2,
                              const F2Class& a3) const;

    // sq(a2) + a1 cup a2; vanishing is the splitting-off criterion for
    // reducing rank 3 to rank 2.
    F2Class rank2_criterion(const F2Class& a1, const F2Class& a2) const;

    std::vector<F2Violation> validate() const;

private:
    struct Loc {
        int degree;
        std::size_t index;
    };

    Loc locate(const std::string& label) const;
    std::vector<std::uint8_t> bits_from_labels(int degree,
                                               const std::vector<std::string>& labels) const;
    void check_class(const F2Class& x, int max_allowed) const;

    int max_degree_ = 0;
    std::vector<std::vector<std::string>> basis_;
    std::vector<F2CupEntry> cup_entries_;
    std::vector<F2SqEntry> sq_entries_;
    std::map<std::string, Loc> label_index_;
    // cup_[p-1][q-1][i * dim(q) + j] is the coordinate vector of the product
    // of basis element i of degree p with j of degree q; empty table for
    // p + q > max_degree.
    std::vector<std::vector<std::vector<std::vector<std::uint8_t>>>> cup_;
    // sq_[p-1][i]: image of basis element i of degree p, over degree p + 1.
    std::vector<std::vector<std::vector<std::uint8_t>>> sq_;
};

} // namespace chowkit
