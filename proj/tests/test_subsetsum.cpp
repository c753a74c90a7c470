#include "jumpfree/subsetsum.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace jumpfree;

namespace {

constexpr SolverMethod all_methods[] = {SolverMethod::Exhaustive, SolverMethod::Dp, SolverMethod::Mitm};

} // namespace

TEST_CASE("solve_subset_sum examples")
{
    for (auto m : all_methods) {
        INFO("method " << to_string(m));
        const IntMultiset a{3, -1, -2};
        const auto cert = solve_subset_sum(a, m);
        REQUIRE(cert);
        CHECK(cert->chosen == a);
        CHECK(is_valid_certificate(*cert, a));

        CHECK_FALSE(solve_subset_sum({1, 2}, m));

        const IntMultiset z{0, 7};
        const auto zc = solve_subset_sum(z, m);
        REQUIRE(zc);
        CHECK(zc->chosen == IntMultiset{0});

        CHECK_FALSE(solve_subset_sum({}, m));
        CHECK_FALSE(solve_subset_sum({-1, 3, 3, 3}, m));
    }
    // Frozen from the positional oracle: none of the 15 nonempty subsets sums to 0.
    CHECK(oracle::nonempty_subset_sums({-1, 3, 3, 3}) == std::set<Int>{-1, 2, 3, 5, 6, 8, 9});
    CHECK(oracle::nonempty_subset_sums({3, -1, -2}) == std::set<Int>{-3, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("capacity guards are distinct from no solution")
{
    IntMultiset big;
    big.add(1, 25);
    CHECK_THROWS_AS(solve_subset_sum(big, SolverMethod::Exhaustive), CapacityError);
    CHECK_FALSE(solve_subset_sum(big, SolverMethod::Dp));
    CHECK_FALSE(solve_subset_sum(big, SolverMethod::Mitm));

    IntMultiset heavy;
    heavy.add(5'000'001, 2);
    CHECK_THROWS_AS(solve_subset_sum(heavy, SolverMethod::Dp), CapacityError);
    CHECK_THROWS_AS(dp_reachable_sums(heavy), CapacityError);

    IntMultiset wide;
    wide.add(1, 41);
    CHECK_THROWS_AS(solve_subset_sum(wide, SolverMethod::Mitm), CapacityError);
}

TEST_CASE("solver methods parse")
{
    CHECK(parse_solver_method("mitm") == SolverMethod::Mitm);
    CHECK_THROWS_AS(parse_solver_method("ilp"), std::invalid_argument);
}

TEST_CASE("exhaustive solver matches positional enumeration")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto items = oracle::random_items(rng, 12, -9, 9);
        const auto ms = IntMultiset::from_values(items);
        const auto cert = solve_subset_sum(ms, SolverMethod::Exhaustive);
        REQUIRE(cert.has_value() == oracle::zero_sum_exists(items));
        if (cert) CHECK(is_valid_certificate(*cert, ms));
    }
}

TEST_CASE("dp and mitm agree with exhaustive and return valid certificates")
{
    std::mt19937_64 rng(43);
    int solvable = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto ms = IntMultiset::from_values(oracle::random_items(rng, 12, -9, 9));
        const bool expected = solve_subset_sum(ms, SolverMethod::Exhaustive).has_value();
        solvable += expected;
        for (auto m : {SolverMethod::Dp, SolverMethod::Mitm}) {
            const auto cert = solve_subset_sum(ms, m);
            REQUIRE(cert.has_value() == expected);
            if (cert) REQUIRE(is_valid_certificate(*cert, ms));
        }
    }
    CHECK(solvable > 200);
    CHECK(solvable < 1900);
}

TEST_CASE("dp reachable sums are sound and complete")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        const auto items = oracle::random_items(rng, 10, -9, 9);
        const auto sums = dp_reachable_sums(IntMultiset::from_values(items));
        const auto expected = oracle::nonempty_subset_sums(items);
        REQUIRE(std::set<Int>(sums.begin(), sums.end()) == expected);
        CHECK(std::is_sorted(sums.begin(), sums.end()));
    }
}

TEST_CASE("adding zero makes any multiset solvable; negation preserves solvability")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 500; ++trial) {
        auto ms = IntMultiset::from_values(oracle::random_items(rng, 10, -9, 9));
        for (auto m : all_methods) {
            CHECK(solve_subset_sum(ms, m).has_value() == solve_subset_sum(ms.negated(), m).has_value());
            auto with_zero = ms;
            with_zero.add(0);
            CHECK(solve_subset_sum(with_zero, m).has_value());
        }
    }
}

TEST_CASE("mitm prefers the smallest absolute half-sum")
{
    // Items (sorted) -5 -1 | 1 5: matches with |left sum| 1 and 5 exist; the
    // left subset {-1} with right {1} wins.
    const auto cert = solve_subset_sum({-5, -1, 1, 5}, SolverMethod::Mitm);
    REQUIRE(cert);
    CHECK(cert->chosen == IntMultiset{-1, 1});
}

TEST_CASE("solvers handle larger inputs within their guards")
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<Int> v(1, 1000);
    IntMultiset pos;
    for (int i = 0; i < 36; ++i) pos.add(v(rng));
    CHECK_FALSE(solve_subset_sum(pos, SolverMethod::Dp));
    CHECK_FALSE(solve_subset_sum(pos, SolverMethod::Mitm));
    auto mixed = pos;
    mixed.add(-pos.values().front() - pos.values().back());
    const auto a = solve_subset_sum(mixed, SolverMethod::Dp);
    const auto b = solve_subset_sum(mixed, SolverMethod::Mitm);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(is_valid_certificate(*a, mixed));
    CHECK(is_valid_certificate(*b, mixed));
}

TEST_CASE("end-to-end experiment")
{
    const Family fam(2, {FiniteFunction("f0", 2, {{{2, 2}, 2}, {{2, 5}, 5}, {{5, 2}, 5}, {{5, 5}, 5}})});
    for (auto m : all_methods) {
        const auto r = run_subset_sum_experiment(fam, 2, GammaTriple{}, m);
        REQUIRE(r.outcome == ExperimentReport::Outcome::Completed);
        REQUIRE(r.witness);
        CHECK(r.witness->function_id == "f0");
        CHECK(r.witness->cube == Cube({2, 5}, 2));
        CHECK(r.f_set == IntMultiset{-1, 3, 3, 3});
        CHECK(r.fh_equal);
        CHECK_FALSE(r.solvable_f);
        CHECK_FALSE(r.solvable_h);
        CHECK(r.agreement);
        CHECK(r.cardinality_ok);
        CHECK(r.timings.solve_f_ms >= 0);
    }

    // No 3-cube anywhere.
    const auto none = run_subset_sum_experiment(fam, 3, GammaTriple{}, SolverMethod::Dp);
    CHECK(none.outcome == ExperimentReport::Outcome::NoWitness);
    CHECK_FALSE(none.witness);
    CHECK_THROWS_AS(run_subset_sum_experiment(fam, 1, GammaTriple{}, SolverMethod::Dp), std::invalid_argument);
}

TEST_CASE("experiment agreement holds on generated families")
{
    UniverseSpec u;
    u.k = 2;
    u.grid_bound = 6;
    u.max_domain_size = 16;
    u.sample_count = 25;
    u.seed = 3;
    const auto universe = build_universe(u);
    for (auto kind : {FamilyKind::Max, FamilyKind::Min, FamilyKind::PredMin}) {
        const auto fam = gen_family(kind, universe);
        for (std::size_t p = 2; p <= 3; ++p) {
            const auto r = run_subset_sum_experiment(fam, p, GammaTriple::parse("zigzag,shifted:10,zigzagNeg"),
                                                    SolverMethod::Dp);
            if (r.outcome == ExperimentReport::Outcome::NoWitness) continue;
            CHECK(r.fh_equal);
            CHECK(r.agreement);
            CHECK(r.cardinality_ok);
        }
    }
}
