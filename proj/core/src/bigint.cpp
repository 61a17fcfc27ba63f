#include "chowkit/bigint.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

std::string to_decimal(const Int& x) { return x.str(); }

Int parse_decimal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size())
        throw input_error("not a decimal integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw input_error("not a decimal integer: '" + s + "'");
    Int x(s.substr(i));
    return s[0] == '-' ? Int(-x) : x;
}

bool is_power_of_two(const Int& x) {
    if (x <= 0) return false;
    Int y = x;
    while ((y & 1) == 0) y >>= 1;
    return y == 1;
}

} // namespace chowkit
