// Microbenchmarks for the exact-arithmetic hot paths: Smith reduction,
// truncated series manipulation, and lattice membership.  Inputs are built
// once per benchmark from fixed seeds so runs are comparable.

#include "chowkit/chow.hpp"
#include "chowkit/intlat.hpp"
#include "chowkit/kzero.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace chowkit;

namespace {

using Rng = std::mt19937_64;

IntMatrix random_matrix(Rng& rng, std::size_t n, long mag) {
    std::uniform_int_distribution<long> d(-mag, mag);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(d(rng));
    return m;
}

// Entries around 10^(digits) to exercise the big-integer layer; products of
// smaller random numbers so the matrix is not artificially structured.
IntMatrix huge_entry_matrix(Rng& rng, std::size_t n, int digits) {
    std::uniform_int_distribution<long> d(1, 9);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int e = 1;
            for (int k = 0; k < digits; ++k) e = e * 10 + d(rng);
            if (d(rng) % 2 == 0) e = -e;
            m(i, j) = e;
        }
    return m;
}

void bm_snf_small_entries(benchmark::State& state) {
    Rng rng(42);
    const std::size_t n = std::size_t(state.range(0));
    const IntMatrix a = random_matrix(rng, n, 99);
    for (auto _ : state) {
        SmithForm sf = smith_normal_form(a);
        benchmark::DoNotOptimize(sf.s);
    }
}
BENCHMARK(bm_snf_small_entries)->Arg(4)->Arg(8)->Arg(12);

void bm_snf_huge_entries(benchmark::State& state) {
    Rng rng(43);
    const IntMatrix a = huge_entry_matrix(rng, 4, int(state.range(0)));
    for (auto _ : state) {
        SmithForm sf = smith_normal_form(a);
        benchmark::DoNotOptimize(sf.s);
    }
}
BENCHMARK(bm_snf_huge_entries)->Arg(20)->Arg(60);

void bm_series_inverse(benchmark::State& state) {
    const int n = int(state.range(0));
    Rng rng(44);
    std::uniform_int_distribution<long> d(-5, 5);
    IntVec c(std::size_t(n) + 1);
    c[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = Int(d(rng));
    const TruncPoly p(n, c);
    for (auto _ : state) {
        TruncPoly inv = series_inverse(p);
        benchmark::DoNotOptimize(inv.coeffs);
    }
}
BENCHMARK(bm_series_inverse)->Arg(8)->Arg(32)->Arg(128);

void bm_total_chern(benchmark::State& state) {
    const int n = int(state.range(0));
    Rng rng(45);
    std::uniform_int_distribution<long> d(-5, 5);
    IntVec c(std::size_t(n) + 1);
    for (auto& e : c) e = Int(d(rng));
    const KClass a(n, c);
    for (auto _ : state) {
        TruncPoly ch = total_chern(a);
        benchmark::DoNotOptimize(ch.coeffs);
    }
}
BENCHMARK(bm_total_chern)->Arg(3)->Arg(8)->Arg(16);

void bm_membership_counterexample(benchmark::State& state) {
    const auto gens = hypersurface_pushforward_generators(6);
    std::vector<IntVec> rows;
    for (const auto& g : gens) rows.push_back(g.coeffs);
    const IntVec target =
        (restricted_bundle_class(6) - Int(2) * KClass::unit(3)).coeffs;
    for (auto _ : state) {
        MembershipVerdict v = lattice_membership(rows, target);
        benchmark::DoNotOptimize(v.member);
    }
}
BENCHMARK(bm_membership_counterexample);

void bm_membership_random(benchmark::State& state) {
    Rng rng(46);
    std::uniform_int_distribution<long> d(-50, 50);
    const std::size_t dim = std::size_t(state.range(0));
    std::vector<IntVec> gens(dim - 1, IntVec(dim));
    for (auto& g : gens)
        for (auto& e : g) e = Int(d(rng));
    IntVec target(dim);
    for (auto& e : target) e = Int(d(rng));
    for (auto _ : state) {
        MembershipVerdict v = lattice_membership(gens, target);
        benchmark::DoNotOptimize(v.member);
    }
}
BENCHMARK(bm_membership_random)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
