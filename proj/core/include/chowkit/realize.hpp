#pragma once

#include "chowkit/chow.hpp"

#include <array>
#include <optional>
#include <set>

namespace chowkit {

// Outcome of building a virtual class with a prescribed Chern tuple on the
// projective-space sandbox. Everything stays at the level of classes in the
// Grothendieck ring: no bundle is produced, only a class whose total Chern
// class matches. Exactly one of cls / discrepancy is set; a discrepancy is
// always odd (an even gap would have been absorbed by a top sigma class).
struct RealizationResult {
    std::optional<KClass> cls;
    std::optional<Int> discrepancy;

    bool realized() const { return cls.has_value(); }
};

// Rank-2 class on the projective plane with Chern classes (c1, c2), always
// possible: pi_2(-c2) + [O(c1)] + [O]. Deterministic output.
KClass realize_pair_surface(const Int& c1, const Int& c2);

// Rank-3 class on projective 3-space with Chern tuple (c1, c2, c3). The base
// candidate kappa = pi_2(-c2) + [O(c1)] + 2[O] has c3(kappa) = c1 c2 + 2 c2;
// the gap c3 - c3(kappa) is absorbed by (gap/2) * sigma^3 when even, and is
// the reported obstruction when odd. Deterministic output.
RealizationResult realize_triple_threefold(const Int& c1, const Int& c2,
                                           const Int& c3);

// Parity triples (c1, c2, c3) mod 2 attained by rank-3 classes on projective
// 3-space whose coefficients all lie in [-bound, bound], by exhaustive
// enumeration. bound must be in [1, 4].
std::set<std::array<int, 3>> attainable_parity_oracle(int bound);

} // namespace chowkit
