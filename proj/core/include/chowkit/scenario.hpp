#pragma once

#include "chowkit/abgroup.hpp"
#include "chowkit/chow.hpp"
#include "chowkit/intlat.hpp"

#include <string>
#include <vector>

namespace chowkit {

struct HypothesisFlag {
    std::string name;
    bool satisfied = false;
    bool operator==(const HypothesisFlag&) const = default;
};

struct ChernSummary {
    IntVec raw;       // degree 1..3 coefficients of the target's Chern class
    IntVec moduli;    // quotient model moduli per degree (0 = no reduction)
    IntVec residues;  // raw reduced by the moduli
    std::string moduli_note;
    bool operator==(const ChernSummary&) const = default;
};

// Full audit record of the stable-triviality decision for the rank-2 class
// on the complement of a degree-delta hypersurface in projective 3-space.
struct StableTrivialityReport {
    Int delta;
    std::vector<HypothesisFlag> hypothesis_flags;
    std::vector<KClass> generators;
    KClass target;
    MembershipVerdict verdict;
    ChernSummary chern_summary;
    std::vector<std::string> provenance_notes;
    std::string interpretation;
};

// delta >= 0; the certificate inside the verdict is re-verified before the
// report is returned.
StableTrivialityReport stable_triviality_report(const Int& delta);

// Fibre-product examples over a mod-2 base group, reported through their
// invariant factors.
struct PullbackExampleReport {
    std::string name;
    std::string description;
    InvariantFactors left_source;
    InvariantFactors right_source;
    InvariantFactors base;
    InvariantFactors result;
    std::vector<std::string> provenance_notes;
};

// name must be one of chowwitt_example_names(); otherwise input_error.
PullbackExampleReport chowwitt_pullback_example(const std::string& name);
const std::vector<std::string>& chowwitt_example_names();

// Consistency check between the torsion of a presented degree-3 group and a
// prescribed mod-2 Betti number.
struct Phi3Report {
    InvariantFactors input_factors;
    InvariantFactors torsion_factors;
    bool torsion_is_f2_space = false;
    std::size_t torsion_dimension = 0;
    std::size_t h3_dim = 0;
    bool consistent = false;
    std::string criterion;
};

Phi3Report phi3_consistency_check(const FpAbGroup& ch3, std::size_t h3_dim);

} // namespace chowkit
