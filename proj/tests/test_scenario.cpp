#include "chowkit/scenario.hpp"
#include "chowkit/kzero.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

#include <algorithm>

using namespace chowkit;
using tst::Rng;

namespace {

bool has_note_containing(const std::vector<std::string>& notes,
                         const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

std::vector<IntVec> generator_vectors(const StableTrivialityReport& r) {
    std::vector<IntVec> v;
    for (const KClass& g : r.generators) v.push_back(g.coeffs);
    return v;
}

} // namespace

TEST_CASE("stable triviality at degree six") {
    const StableTrivialityReport r = stable_triviality_report(6);

    CHECK(r.delta == 6);
    REQUIRE(r.generators.size() == 3);
    CHECK(r.generators[0] == KClass(3, {11, -36, 45, -20}));
    CHECK(r.generators[1] == KClass(3, {20, -69, 84, -35}));
    CHECK(r.generators[2] == KClass(3, {2, -6, 6, -2}));
    CHECK(r.target == KClass(3, {-12, 30, -24, 6}));

    CHECK(!r.verdict.member);
    REQUIRE(r.verdict.certificate.has_value());
    CHECK(r.verdict.certificate->modulus == 8);
    CHECK(is_power_of_two(r.verdict.certificate->modulus));
    CHECK(verify_certificate(generator_vectors(r), r.target.coeffs,
                             *r.verdict.certificate));

    REQUIRE(r.hypothesis_flags.size() == 2);
    CHECK(r.hypothesis_flags[0] == HypothesisFlag{"degree-at-least-4", true});
    CHECK(r.hypothesis_flags[1] == HypothesisFlag{"degree-2-mod-4", true});
    CHECK(r.interpretation == "non-member-hypotheses-satisfied");

    CHECK(r.chern_summary.raw == IntVec{0, 6, 0});
    CHECK(r.chern_summary.moduli == IntVec{6, 6, 2});
    CHECK(r.chern_summary.residues == IntVec{0, 0, 0});
    CHECK(r.chern_summary.moduli_note.find("derived") != std::string::npos);

    CHECK(has_note_containing(r.provenance_notes, "sandbox model"));
    CHECK(has_note_containing(r.provenance_notes, "2-primary"));
}

TEST_CASE("stable triviality across the degree family") {
    SUBCASE("degree two: arithmetic-only non-member") {
        const StableTrivialityReport r = stable_triviality_report(2);
        CHECK(!r.verdict.member);
        CHECK(r.verdict.certificate->modulus == 8);
        CHECK(r.hypothesis_flags[0].satisfied == false);
        CHECK(r.hypothesis_flags[1].satisfied == true);
        CHECK(r.interpretation == "non-member-arithmetic-only");
    }
    SUBCASE("degree four: member") {
        const StableTrivialityReport r = stable_triviality_report(4);
        REQUIRE(r.verdict.member);
        const auto& coef = *r.verdict.coefficients;
        IntVec back(4);
        const auto gens = generator_vectors(r);
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t i = 0; i < 4; ++i) back[i] += coef[j] * gens[j][i];
        CHECK(back == r.target.coeffs);
        CHECK(r.hypothesis_flags[1].satisfied == false);
        CHECK(r.interpretation == "member-arithmetic-only");
    }
    SUBCASE("degree ten: hypotheses hold again") {
        const StableTrivialityReport r = stable_triviality_report(10);
        CHECK(!r.verdict.member);
        CHECK(r.verdict.certificate->modulus == 8);
        CHECK(r.interpretation == "non-member-hypotheses-satisfied");
    }
    SUBCASE("degree zero: trivial member") {
        const StableTrivialityReport r = stable_triviality_report(0);
        CHECK(r.target == KClass::zero(3));
        REQUIRE(r.verdict.member);
        CHECK(r.interpretation == "member-trivially");
        CHECK(r.chern_summary.raw == IntVec{0, 0, 0});
        CHECK(r.chern_summary.moduli == IntVec{0, 0, 0});
    }
    SUBCASE("negative degree rejected") {
        CHECK_THROWS_AS(stable_triviality_report(-1), value_error);
    }
}

TEST_CASE("membership verdict is a coset property") {
    const StableTrivialityReport r6 = stable_triviality_report(6);
    const auto gens = generator_vectors(r6);

    SUBCASE("permuting generators") {
        std::vector<std::size_t> idx{0, 1, 2};
        do {
            std::vector<IntVec> perm;
            for (std::size_t i : idx) perm.push_back(gens[i]);
            const MembershipVerdict v = lattice_membership(perm, r6.target.coeffs);
            CHECK(v.member == r6.verdict.member);
            REQUIRE(v.certificate.has_value());
            CHECK(verify_certificate(perm, r6.target.coeffs, *v.certificate));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    SUBCASE("shifting the target by lattice elements") {
        Rng rng(67);
        for (int it = 0; it < 20; ++it) {
            IntVec shifted = r6.target.coeffs;
            for (const IntVec& g : gens) {
                const Int c = tst::rand_int(rng, -5, 5);
                for (std::size_t i = 0; i < 4; ++i) shifted[i] += c * g[i];
            }
            CHECK(lattice_membership(gens, shifted).member == r6.verdict.member);
        }
        const StableTrivialityReport r4 = stable_triviality_report(4);
        const auto gens4 = generator_vectors(r4);
        for (int it = 0; it < 10; ++it) {
            IntVec shifted = r4.target.coeffs;
            for (const IntVec& g : gens4) {
                const Int c = tst::rand_int(rng, -5, 5);
                for (std::size_t i = 0; i < 4; ++i) shifted[i] += c * g[i];
            }
            CHECK(lattice_membership(gens4, shifted).member);
        }
    }
}

TEST_CASE("fibre product example reports") {
    CHECK(chowwitt_example_names() ==
          std::vector<std::string>{"s2-times-a1", "right-leg-iso", "custom"});

    const PullbackExampleReport s2 = chowwitt_pullback_example("s2-times-a1");
    CHECK(s2.result == InvariantFactors{1, {}});
    CHECK(s2.left_source == InvariantFactors{1, {}});
    CHECK(s2.base == InvariantFactors{0, {Int(2)}});

    const PullbackExampleReport iso = chowwitt_pullback_example("right-leg-iso");
    CHECK(iso.result == iso.left_source);
    CHECK(iso.result == InvariantFactors{1, {Int(4)}});

    const PullbackExampleReport cst = chowwitt_pullback_example("custom");
    CHECK(cst.result == InvariantFactors{1, {Int(4)}});

    CHECK_THROWS_AS(chowwitt_pullback_example("nope"), input_error);
}

TEST_CASE("degree-3 torsion consistency") {
    SUBCASE("torsion-free input satisfies the injectivity criterion") {
        const Phi3Report r = phi3_consistency_check(FpAbGroup::free_group(1), 0);
        CHECK(r.consistent);
        CHECK(r.torsion_dimension == 0);
        CHECK(r.criterion.find("satisfied") != std::string::npos);
    }
    SUBCASE("matching two-torsion is consistent") {
        const FpAbGroup g = direct_sum(FpAbGroup::free_group(1), FpAbGroup::cyclic(2));
        const Phi3Report r = phi3_consistency_check(g, 1);
        CHECK(r.consistent);
        CHECK(r.torsion_is_f2_space);
        CHECK(r.torsion_dimension == 1);
        CHECK(r.criterion.find("not applicable") != std::string::npos);
    }
    SUBCASE("higher torsion is always inconsistent") {
        const FpAbGroup g = direct_sum(FpAbGroup::free_group(1), FpAbGroup::cyclic(4));
        for (std::size_t h : {0u, 1u, 2u}) {
            const Phi3Report r = phi3_consistency_check(g, h);
            CHECK(!r.consistent);
            CHECK(!r.torsion_is_f2_space);
        }
    }
    SUBCASE("dimension mismatch is inconsistent") {
        const FpAbGroup g = direct_sum(FpAbGroup::cyclic(2), FpAbGroup::cyclic(2));
        CHECK(phi3_consistency_check(g, 2).consistent);
        CHECK(!phi3_consistency_check(g, 3).consistent);
        CHECK(phi3_consistency_check(g, 2).torsion_factors ==
              InvariantFactors{0, {Int(2), Int(2)}});
    }
}
