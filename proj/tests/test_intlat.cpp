#include "chowkit/intlat.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

#include <numeric>

using namespace chowkit;
using tst::Rng;

namespace {

void check_smith_invariants(const IntMatrix& a, const SmithForm& f) {
    REQUIRE(f.u.rows() == a.rows());
    REQUIRE(f.v.rows() == a.cols());
    CHECK(f.u * a * f.v == f.s);
    CHECK(tst::is_unimodular(f.u));
    CHECK(tst::is_unimodular(f.v));
    const IntVec d = f.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(d[i + 1] % d[i] == 0);
        }
    }
    for (std::size_t i = 0; i < f.s.rows(); ++i)
        for (std::size_t j = 0; j < f.s.cols(); ++j)
            if (i != j) CHECK(f.s(i, j) == 0);
}

// gcd of all k x k minors of a, or 0 when every minor vanishes.
Int minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        if (k > n) return out;
        for (;;) {
            out.push_back(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    };
    row_sets = subsets(a.rows(), k);
    col_sets = subsets(a.cols(), k);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = a(rs[i], cs[j]);
            g = boost::multiprecision::gcd(g, sub.determinant());
        }
    return g;
}

} // namespace

TEST_CASE("smith form of small examples") {
    SUBCASE("identity") {
        const IntMatrix a = IntMatrix::identity(3);
        const SmithForm f = smith_normal_form(a);
        CHECK(f.s == IntMatrix::identity(3));
        check_smith_invariants(a, f);
    }
    SUBCASE("1x1") {
        const IntMatrix a = IntMatrix::from_rows({{Int(6)}});
        const SmithForm f = smith_normal_form(a);
        CHECK(f.s(0, 0) == 6);
        check_smith_invariants(a, f);
    }
    SUBCASE("2x2 with nontrivial factors") {
        const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        const SmithForm f = smith_normal_form(a);
        CHECK(f.diagonal() == IntVec{2, 4});
        check_smith_invariants(a, f);
    }
    SUBCASE("zero matrix") {
        const IntMatrix a(2, 3);
        const SmithForm f = smith_normal_form(a);
        CHECK(f.diagonal() == IntVec{0, 0});
        check_smith_invariants(a, f);
    }
    SUBCASE("negative entries normalize to nonnegative factors") {
        const IntMatrix a = IntMatrix::from_rows({{-6}});
        const SmithForm f = smith_normal_form(a);
        CHECK(f.s(0, 0) == 6);
        check_smith_invariants(a, f);
    }
    SUBCASE("empty shapes") {
        for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {3, 0}, {0, 3}}) {
            const IntMatrix a(r, c);
            const SmithForm f = smith_normal_form(a);
            CHECK(f.s == a);
            check_smith_invariants(a, f);
        }
    }
    SUBCASE("pushforward generator matrix") {
        // Columns (11,-36,45,-20), (20,-69,84,-35), (2,-6,6,-2).
        const IntMatrix a = IntMatrix::from_rows({{11, 20, 2},
                                                  {-36, -69, -6},
                                                  {45, 84, 6},
                                                  {-20, -35, -2}});
        const SmithForm f = smith_normal_form(a);
        CHECK(f.diagonal() == IntVec{1, 3, 24});
        check_smith_invariants(a, f);
    }
}

TEST_CASE("smith form is deterministic") {
    Rng rng(101);
    for (int it = 0; it < 20; ++it) {
        const IntMatrix a = tst::rand_matrix(rng, 5, 9);
        const SmithForm f1 = smith_normal_form(a);
        const SmithForm f2 = smith_normal_form(a);
        CHECK(f1.u == f2.u);
        CHECK(f1.s == f2.s);
        CHECK(f1.v == f2.v);
    }
}

TEST_CASE("smith form random suite with minor-gcd oracle") {
    Rng rng(7);
    for (int it = 0; it < 150; ++it) {
        const IntMatrix a = tst::rand_matrix(rng, 5, 9);
        const SmithForm f = smith_normal_form(a);
        check_smith_invariants(a, f);
        // d_1 * ... * d_k equals the gcd of k x k minors, for every k.
        const IntVec d = f.diagonal();
        Int prod = 1;
        for (std::size_t k = 1; k <= d.size(); ++k) {
            prod *= d[k - 1];
            CHECK(prod == minor_gcd(a, k));
        }
    }
}

TEST_CASE("determinant") {
    CHECK(IntMatrix::from_rows({{2, 4}, {6, 8}}).determinant() == -8);
    CHECK(IntMatrix::identity(4).determinant() == 1);
    CHECK(IntMatrix(0, 0).determinant() == 1);
    CHECK(IntMatrix::from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    CHECK_THROWS_AS(IntMatrix(2, 3).determinant(), dimension_error);
}

TEST_CASE("unimodular inverse") {
    Rng rng(11);
    for (int it = 0; it < 30; ++it) {
        const IntMatrix a = tst::rand_matrix(rng, 4, 6);
        const SmithForm f = smith_normal_form(a);
        CHECK(f.u * inverse_unimodular(f.u) == IntMatrix::identity(f.u.rows()));
        CHECK(inverse_unimodular(f.v) * f.v == IntMatrix::identity(f.v.rows()));
    }
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{Int(2)}})), value_error);
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix(2, 3)), value_error);
}

TEST_CASE("integer solve") {
    SUBCASE("even lattice misses odd target") {
        const IntMatrix a = IntMatrix::from_rows({{Int(2)}});
        CHECK(!solve_integer(a, {Int(3)}).has_value());
        const auto x = solve_integer(a, {Int(10)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 5);
    }
    SUBCASE("2x2 solvable") {
        const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        const auto x = solve_integer(a, {Int(2), Int(6)});
        REQUIRE(x.has_value());
        CHECK(matvec(a, *x) == IntVec{2, 6});
    }
    SUBCASE("random planted solutions") {
        Rng rng(23);
        for (int it = 0; it < 100; ++it) {
            const IntMatrix a = tst::rand_matrix(rng, 5, 9);
            const IntVec x = tst::rand_vec(rng, a.cols(), 7);
            const IntVec b = matvec(a, x);
            const auto got = solve_integer(a, b);
            REQUIRE(got.has_value());
            CHECK(matvec(a, *got) == b);
        }
    }
    SUBCASE("wrong length throws") {
        CHECK_THROWS_AS(solve_integer(IntMatrix(2, 2), IntVec(3)), dimension_error);
    }
}

TEST_CASE("lattice membership basics") {
    SUBCASE("empty generator list") {
        const MembershipVerdict v = lattice_membership({}, {});
        CHECK(v.member);
        REQUIRE(v.coefficients.has_value());
        CHECK(v.coefficients->empty());

        const MembershipVerdict w = lattice_membership({}, {Int(0), Int(0)});
        CHECK(w.member);

        const MembershipVerdict bad = lattice_membership({}, {Int(0), Int(5)});
        CHECK(!bad.member);
        REQUIRE(bad.certificate.has_value());
        CHECK(verify_certificate({}, {Int(0), Int(5)}, *bad.certificate));
    }
    SUBCASE("diagonal lattice") {
        const std::vector<IntVec> gens{{Int(2), Int(0)}, {Int(0), Int(3)}};
        const MembershipVerdict yes = lattice_membership(gens, {Int(4), Int(9)});
        REQUIRE(yes.member);
        CHECK(*yes.coefficients == IntVec{2, 3});

        const MembershipVerdict no = lattice_membership(gens, {Int(1), Int(0)});
        CHECK(!no.member);
        REQUIRE(no.certificate.has_value());
        CHECK(no.certificate->modulus == 2);
        CHECK(verify_certificate(gens, {Int(1), Int(0)}, *no.certificate));
    }
    SUBCASE("mismatched lengths throw") {
        CHECK_THROWS_AS(lattice_membership({{Int(1), Int(2)}, {Int(3)}}, {Int(0), Int(0)}),
                        dimension_error);
        CHECK_THROWS_AS(lattice_membership({{Int(1)}}, {Int(0), Int(0)}), dimension_error);
    }
}

TEST_CASE("membership verdict for the pushforward lattice") {
    const std::vector<IntVec> gens{{11, -36, 45, -20},
                                   {20, -69, 84, -35},
                                   {2, -6, 6, -2}};

    SUBCASE("the delta = 6 target is excluded with a 2-power certificate") {
        const IntVec target{-12, 30, -24, 6};
        const MembershipVerdict v = lattice_membership(gens, target);
        CHECK(!v.member);
        REQUIRE(v.certificate.has_value());
        CHECK(is_power_of_two(v.certificate->modulus));
        CHECK(v.certificate->modulus == 8);
        CHECK(verify_certificate(gens, target, *v.certificate));
    }
    SUBCASE("combinations of generators are members") {
        Rng rng(31);
        for (int it = 0; it < 25; ++it) {
            IntVec t(4);
            IntVec coef = tst::rand_vec(rng, 3, 10);
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t i = 0; i < 4; ++i) t[i] += coef[j] * gens[j][i];
            const MembershipVerdict v = lattice_membership(gens, t);
            REQUIRE(v.member);
            IntVec back(4);
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t i = 0; i < 4; ++i)
                    back[i] += (*v.coefficients)[j] * gens[j][i];
            CHECK(back == t);
        }
    }
    SUBCASE("zero target is trivially a member") {
        const MembershipVerdict v = lattice_membership(gens, IntVec(4));
        CHECK(v.member);
    }
}

TEST_CASE("membership agrees with bounded search") {
    Rng rng(47);
    const long B = 6;
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<std::size_t> gcount(1, 3);
        const std::size_t k = gcount(rng);
        std::vector<IntVec> gens;
        for (std::size_t j = 0; j < k; ++j) gens.push_back(tst::rand_vec(rng, 3, 3));
        const IntVec target = tst::rand_vec(rng, 3, 6);

        bool found = false;
        std::vector<long> idx(k, -B);
        for (;;) {
            IntVec t(3);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < 3; ++i) t[i] += Int(idx[j]) * gens[j][i];
            if (t == target) { found = true; break; }
            std::size_t c = 0;
            while (c < k && idx[c] == B) { idx[c] = -B; ++c; }
            if (c == k) break;
            ++idx[c];
        }

        const MembershipVerdict v = lattice_membership(gens, target);
        if (found) CHECK(v.member);
        if (!v.member) {
            CHECK(!found);
            REQUIRE(v.certificate.has_value());
            CHECK(verify_certificate(gens, target, *v.certificate));
            CHECK(tst::is_prime_power(v.certificate->modulus));
        } else {
            IntVec back(3);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < 3; ++i)
                    back[i] += (*v.coefficients)[j] * gens[j][i];
            CHECK(back == target);
        }
    }
}

TEST_CASE("matrix plumbing") {
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), dimension_error);
    CHECK_THROWS_AS(IntMatrix(2, 2, IntVec(3)), dimension_error);
    CHECK_THROWS_AS(matvec(IntMatrix(2, 3), IntVec(2)), dimension_error);
    CHECK_THROWS_AS(vecmat(IntVec(2), IntMatrix(3, 2)), dimension_error);
    CHECK_THROWS_AS(IntMatrix(2, 2) * IntMatrix(3, 3), dimension_error);

    const IntMatrix a = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(a.transpose().transpose() == a);
    CHECK(a.row(1) == IntVec{4, 5, 6});
    CHECK(a.col(2) == IntVec{3, 6});
    CHECK(vecmat({Int(1), Int(1)}, a) == IntVec{5, 7, 9});
    CHECK(matvec(a, {Int(1), Int(0), Int(-1)}) == IntVec{-2, -2});
    CHECK_THROWS_AS(a.at(2, 0), dimension_error);
}

TEST_CASE("decimal helpers") {
    CHECK(parse_decimal("-45") == -45);
    CHECK(parse_decimal("+7") == 7);
    CHECK(to_decimal(Int("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK(parse_decimal(to_decimal(Int(-98765))) == -98765);
    CHECK_THROWS_AS(parse_decimal(""), input_error);
    CHECK_THROWS_AS(parse_decimal("12a"), input_error);
    CHECK_THROWS_AS(parse_decimal("-"), input_error);
    CHECK(is_power_of_two(Int(8)));
    CHECK(is_power_of_two(Int(1)));
    CHECK(!is_power_of_two(Int(24)));
    CHECK(!is_power_of_two(Int(0)));
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_mod(Int(-7), Int(2)) == 1);
    CHECK(floor_mod(Int(7), Int(2)) == 1);
}
