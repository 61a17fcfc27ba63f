#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace chowkit {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division and the matching nonnegative remainder. cpp_int's operator/
// truncates toward zero; the reduction steps in the Smith form and all
// canonical residues need the floor convention.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r = a - floor_div(a, b) * b;
    return r;
}

std::string to_decimal(const Int& x);

// Strict decimal parse: optional leading '-', then digits only.
// Throws input_error on anything else.
Int parse_decimal(const std::string& s);

// True when x == 2^k for some k >= 0.
bool is_power_of_two(const Int& x);

using IntVec = std::vector<Int>;

} // namespace chowkit
