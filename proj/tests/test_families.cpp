#include "jumpfree/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <future>
#include <algorithm>
#include <random>
#include <stdexcept>

using namespace jumpfree;

namespace {

UniverseSpec spec(std::size_t k, Nat grid, std::size_t max_domain, std::size_t samples, std::uint64_t seed = 0,
                  bool cubes = true)
{
    UniverseSpec u;
    u.k = k;
    u.grid_bound = grid;
    u.max_domain_size = max_domain;
    u.sample_count = samples;
    u.seed = seed;
    u.include_all_cubes = cubes;
    return u;
}

TupleSet square(std::vector<Nat> e)
{
    TupleSet d;
    for (const auto &t : oracle::power(e, 2)) d.insert(t);
    return d;
}

} // namespace

TEST_CASE("build_universe cubes")
{
    CHECK(build_universe(spec(2, 3, 4, 0)) == std::vector<TupleSet>{square({0, 1}), square({0, 2}), square({1, 2})});
    CHECK(build_universe(spec(2, 3, 9, 0)) ==
          std::vector<TupleSet>{square({0, 1}), square({0, 2}), square({1, 2}), square({0, 1, 2})});
    CHECK(build_universe(spec(2, 3, 3, 0)).empty());
    CHECK(build_universe(spec(2, 5, 9, 0, 0, false)).empty());
    // C(4,2) + C(4,3) + C(4,4) cubes when every size fits.
    CHECK(build_universe(spec(2, 4, 16, 0)).size() == 11);
}

TEST_CASE("build_universe samples")
{
    const auto u = spec(2, 4, 8, 50, 7);
    const auto a = build_universe(u);
    CHECK(a == build_universe(u));
    CHECK(a != build_universe(spec(2, 4, 8, 50, 8)));
    CHECK(a.size() <= 6 + 50);
    std::set<TupleSet> seen;
    for (const auto &d : a) {
        CHECK(!d.empty());
        CHECK(d.size() <= 8);
        CHECK(common_arity(d) == 2);
        for (Nat c : field(d)) CHECK(c < 4);
        CHECK(seen.insert(d).second);
    }

    // A grid with fewer points than max_domain still terminates.
    const auto tiny = build_universe(spec(1, 2, 50, 20, 1, false));
    for (const auto &d : tiny) CHECK(d.size() <= 2);
}

TEST_CASE("build_universe validation")
{
    CHECK_THROWS_AS(build_universe(spec(2, 1, 4, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_universe(spec(2, 4, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_universe(spec(0, 4, 4, 0)), std::invalid_argument);
}

TEST_CASE("gen_family rules")
{
    const std::vector<TupleSet> universe{square({2, 5}), {{1, 2}, {0, 9}}, {{1, 2}}};

    const auto predmin = gen_family(FamilyKind::PredMin, universe);
    CHECK(predmin.members()[0].at({5, 5}) == 2);
    CHECK(predmin.members()[0].at({2, 2}) == 2);
    CHECK(predmin.members()[0].id() == "f0");

    const auto fmax = gen_family(FamilyKind::Max, universe);
    const auto fmin = gen_family(FamilyKind::Min, universe);
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (const auto &x : universe[i]) {
            CHECK(fmax.members()[i].at(x) == x.max());
            CHECK(fmin.members()[i].at(x) == x.min());
        }

    const auto constmin = gen_family(FamilyKind::ConstMin, universe);
    CHECK(constmin.members()[1].at({1, 2}) == 0);
    CHECK(constmin.members()[2].at({1, 2}) == 1);
    const auto w = jump_free_violation(constmin.members()[1], constmin.members()[2]);
    REQUIRE(w);
    CHECK(w->x == KTuple{1, 2});
    CHECK(is_jump_free_family(constmin));

    CHECK_THROWS_AS(gen_family(FamilyKind::Max, {}), std::invalid_argument);
    CHECK(parse_family_kind("predmin") == FamilyKind::PredMin);
    CHECK_THROWS_AS(parse_family_kind("median"), std::invalid_argument);
}

TEST_CASE("generated families are reflexive, full, and jump-free where expected")
{
    for (Nat n = 2; n <= 4; ++n)
        for (std::size_t m = 1; m <= 9; ++m) {
            const auto u = spec(2, n, m, 6, n * 31 + m);
            const auto universe = build_universe(u);
            if (universe.empty()) continue;
            for (auto kind : {FamilyKind::Max, FamilyKind::Min, FamilyKind::PredMin, FamilyKind::ConstMin}) {
                const auto fam = gen_family(kind, universe);
                CHECK_FALSE(is_full_over(fam, universe));
                for (const auto &f : fam.members()) CHECK(is_reflexive(f));
                if (kind != FamilyKind::ConstMin) {
                    INFO("kind " << to_string(kind) << " n " << n << " m " << m);
                    CHECK_FALSE(is_jump_free_family(fam));
                }
            }
        }
}

TEST_CASE("constmin violation shape")
{
    // A ⊃ {x, z} with min(field(A)) below min(x), and B = {x}.
    const std::vector<TupleSet> universe{{{3, 3}, {0, 3}}, {{3, 3}}};
    const auto w = is_jump_free_family(gen_family(FamilyKind::ConstMin, universe));
    REQUIRE(w);
    CHECK(w->id_a == "f0");
    CHECK(w->id_b == "f1");
}

TEST_CASE("witness search")
{
    const auto universe = build_universe(spec(2, 3, 9, 0));
    const auto w = find_regressively_regular_witness(gen_family(FamilyKind::Max, universe), 2);
    REQUIRE(w);
    CHECK(w->function_id == "f0");
    CHECK(w->cube == Cube({0, 1}, 2));
    CHECK(w->report.overall);
    CHECK(w->stats.functions_examined == 1);
    CHECK(w->stats.cubes_examined == 1);

    const auto wmin = find_regressively_regular_witness(gen_family(FamilyKind::Min, universe), 3);
    REQUIRE(wmin);
    CHECK(wmin->function_id == "f3");
    CHECK(wmin->cube == Cube({0, 1, 2}, 2));
    CHECK(wmin->stats.functions_examined == 4);

    // predmin on single 2-cubes maps (b,b) to a < b, failing both cases.
    const auto pm = gen_family(FamilyKind::PredMin, {square({2, 5}), square({1, 3}), square({0, 4})});
    CHECK_FALSE(find_regressively_regular_witness(pm, 2));

    // Fields smaller than p give nothing rather than an error.
    CHECK_FALSE(find_regressively_regular_witness(gen_family(FamilyKind::Max, universe), 4));

    CHECK_THROWS_AS(find_regressively_regular_witness(gen_family(FamilyKind::Max, universe), 1), std::invalid_argument);
    const auto line = gen_family(FamilyKind::Max, {{{1}, {2}}});
    CHECK_THROWS_AS(find_regressively_regular_witness(line, 2), std::invalid_argument);
}

TEST_CASE("witness search is deterministic and re-validates")
{
    const auto universe = build_universe(spec(2, 5, 16, 30, 4));
    for (auto kind : {FamilyKind::Max, FamilyKind::Min, FamilyKind::PredMin, FamilyKind::ConstMin}) {
        const auto fam = gen_family(kind, universe);
        for (std::size_t p = 2; p <= 3; ++p) {
            const auto serial = find_regressively_regular_witness(fam, p);
            std::vector<std::future<std::optional<WitnessResult>>> runs;
            for (int t = 0; t < 4; ++t)
                runs.push_back(std::async(std::launch::async, [&] { return find_regressively_regular_witness(fam, p); }));
            for (auto &r : runs) CHECK(r.get() == serial);
            if (serial) {
                CHECK(regressive_regularity(member(fam, serial->function_id), serial->cube).overall);
                CHECK(oracle::regular(member(fam, serial->function_id), serial->cube.elements(), 2));
            }
        }
    }
}
