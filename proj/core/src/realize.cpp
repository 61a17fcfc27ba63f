#include "chowkit/realize.hpp"

namespace chowkit {

KClass realize_pair_surface(const Int& c1, const Int& c2) {
    return pi_map(2, -c2, 2) + line_bundle_class(c1, 2) + KClass::unit(2);
}

RealizationResult realize_triple_threefold(const Int& c1, const Int& c2,
                                           const Int& c3) {
    const KClass kappa = pi_map(2, -c2, 3) + line_bundle_class(c1, 3) +
                         Int(2) * KClass::unit(3);
    const Int gap = c3 - chern_component(3, kappa);
    if ((gap & 1) != 0)
        return RealizationResult{std::nullopt, gap};
    return RealizationResult{kappa + pi_map(3, gap / 2, 3), std::nullopt};
}

std::set<std::array<int, 3>> attainable_parity_oracle(int bound) {
    if (bound < 1 || bound > 4)
        throw value_error("parity oracle: bound must be in [1, 4]");
    std::set<std::array<int, 3>> out;
    IntVec c(4, Int(-bound));
    for (;;) {
        Int r = 0;
        for (const Int& e : c) r += e;
        if (r == 3) {
            const TruncPoly ch = total_chern(KClass(3, c));
            out.insert({static_cast<int>(floor_mod(ch.coeffs[1], 2)),
                        static_cast<int>(floor_mod(ch.coeffs[2], 2)),
                        static_cast<int>(floor_mod(ch.coeffs[3], 2))});
        }
        std::size_t i = 0;
        while (i < 4 && c[i] == bound) c[i++] = -bound;
        if (i == 4) break;
        ++c[i];
    }
    return out;
}

} // namespace chowkit
