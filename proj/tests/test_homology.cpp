#include <doctest.h>

#include <algorithm>
#include <random>

#include "cae/homology.hpp"
#include "cae/oracles.hpp"
#include "cae/partitions.hpp"

using namespace cae;

TEST_CASE("pair connectivity from orbits")
{
    const Surface s2(2);
    CHECK(hc_connected_pair(make_arc(reg_point(s2, 1, 0), reg_point(s2, 1, 2)),
                            make_arc(reg_point(s2, 1, 5), reg_point(s2, 1, 9)), s2));
    CHECK_FALSE(hc_connected_pair(make_arc(reg_point(s2, 1, 0), reg_point(s2, 1, 2)),
                                  make_arc(reg_point(s2, 2, 0), reg_point(s2, 2, 2)), s2));
    const Surface s4(4);
    CHECK(hc_connected_pair(make_arc(reg_point(s4, 0, 0), reg_point(s4, 2, 0)),
                            make_arc(reg_point(s4, 1, 0), reg_point(s4, 3, 0)), s4));
}

TEST_CASE("hc decomposition")
{
    const Surface s2(2);
    const DirectSum single(s2, {make_arc(acc_point(s2, 0), reg_point(s2, 0, 0))});
    CHECK(hc_decompose(single).size() == 1);

    const DirectSum split(s2, {make_arc(reg_point(s2, 1, 0), reg_point(s2, 1, 2)),
                               make_arc(reg_point(s2, 2, 0), reg_point(s2, 2, 2))});
    const auto comps = hc_decompose(split);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].orbit_sites == std::vector<Site>{Site{false, 0}});
    CHECK(comps[1].orbit_sites == std::vector<Site>{Site{false, 1}});
    CHECK_FALSE(is_hom_connected(split));

    for (int n : {1, 2, 3, 4})
        CHECK(hc_decompose(standard_generator_E(n)).size() == 1);
}

TEST_CASE("hc decomposition is invariant under permutation and suspension")
{
    const Surface s(3);
    std::mt19937 rng(59);
    const auto objects = sample_objects(s, 40, 4, 3, 1234);
    for (const DirectSum& g : objects) {
        const auto base = hc_decompose(g);
        // Per-summand suspension: orbits are shift-invariant, so the split
        // into components must not move.
        std::vector<Arc> shifted;
        std::vector<long long> shifts;
        for (const Arc& a : g.summands()) {
            const long long j = static_cast<long long>(rng() % 7) - 3;
            shifted.push_back(suspend(a, j));
            shifts.push_back(j);
        }
        const auto moved = hc_decompose(DirectSum(s, shifted));
        REQUIRE(moved.size() == base.size());
        for (std::size_t c = 0; c < base.size(); ++c)
            CHECK(moved[c].orbit_sites == base[c].orbit_sites);
    }
}

TEST_CASE("hom connectivity of singletons")
{
    const Surface s(2);
    CHECK(is_hom_connected(DirectSum(s, {make_arc(acc_point(s, 0), acc_point(s, 1))})));
    CHECK(is_hom_connected(DirectSum(s, {})));
    for (int n : {1, 2, 3})
        CHECK(is_hom_connected(standard_generator_E(n)));
}

TEST_CASE("homological length of the standard generators")
{
    for (int n : {1, 2, 3})
        CHECK(homological_length(standard_generator_E(n), 8) == 1);

    const Surface s2(2);
    const DirectSum lng(s2, {make_arc(reg_point(s2, 0, 0), reg_point(s2, 1, 0))});
    CHECK(homological_length(lng, 8) == 1);

    const Surface s1(1);
    const DirectSum lim(s1, {make_arc(acc_point(s1, 0), reg_point(s1, 0, 0))});
    CHECK(homological_length(lim, 8) == 1);

    CHECK(homological_length(generator_M(2, 2), 8) == 2);
}

TEST_CASE("homological length reports instability for a single short arc")
{
    const Surface s(1);
    const DirectSum shrt(s, {make_arc(reg_point(s, 0, 0), reg_point(s, 0, 2))});
    REQUIRE(is_hom_connected(shrt));
    // Consecutive shifts cross but distant ones need ever-longer zig-zags,
    // so the window-doubling rule refuses to report a value.
    CHECK_FALSE(homological_length(shrt, 6).has_value());
}

TEST_CASE("homological length requires connectivity")
{
    const Surface s(2);
    const DirectSum split(s, {make_arc(reg_point(s, 0, 0), reg_point(s, 0, 2)),
                              make_arc(reg_point(s, 1, 0), reg_point(s, 1, 2))});
    CHECK_THROWS_AS(homological_length(split, 8), DomainError);
}

TEST_CASE("level sets of the fan generator")
{
    const DirectSum e2 = standard_generator_E(2);
    const Surface s = e2.surface();

    // Level 1 holds exactly the arcs through acc(1), up to window effects.
    CHECK(level_membership(make_arc(acc_point(s, 1), reg_point(s, 1, -2)), e2, 1, 8));
    const Arc avoid = make_arc(reg_point(s, 1, 0), reg_point(s, 2, 0));
    CHECK_FALSE(level_membership(avoid, e2, 1, 8));
    CHECK(level_membership(avoid, e2, 2, 8));

    // Monotone in the level index and in the window.
    LevelSets levels(e2, 8);
    const auto l1 = levels.level(1);
    const auto l2 = levels.level(2);
    for (const Arc& a : l1)
        CHECK(l2.count(a) == 1);
    LevelSets wide(e2, 12);
    for (const Arc& a : l2)
        CHECK(wide.level(2).count(a) == 1);
}

TEST_CASE("level sets never leave the thick closure")
{
    const Surface s(2);
    const DirectSum g(s, {make_arc(reg_point(s, 1, 0), reg_point(s, 1, 2))});
    const Arc outside = make_arc(reg_point(s, 2, 0), reg_point(s, 2, 2));
    REQUIRE_FALSE(thick_membership(outside, thick_closure(g), s));
    for (int r = 1; r <= 4; ++r)
        CHECK_FALSE(level_membership(outside, g, r, 8));
}

TEST_CASE("star product stays inside the level sum")
{
    const DirectSum e2 = standard_generator_E(2);
    LevelSets levels(e2, 8);
    const auto& l1 = levels.level(1);
    const auto& l2 = levels.level(2);
    const auto& l3 = levels.level(3);
    int checked = 0;
    for (const Arc& a : l2)
        for (const Arc& b : l1) {
            if (ext1_dim(b, a)) {
                for (const Arc& m : extension_middle(a, b).middle) {
                    CHECK(l3.count(m) == 1);
                    ++checked;
                }
            }
            if (checked > 2000)
                return;
        }
}

TEST_CASE("generation time")
{
    for (int n : {1, 2}) {
        const GenerationTime t = generation_time(standard_generator_E(n), 8);
        CHECK(t.exact);
        CHECK(t.steps == 1);
    }
    const Surface s(2);
    const DirectSum shrt(s, {make_arc(reg_point(s, 0, 0), reg_point(s, 0, 2))});
    CHECK_THROWS_AS(generation_time(shrt, 8), DomainError);
}

TEST_CASE("generator criterion")
{
    for (int n : {1, 2, 3})
        CHECK(is_generator(standard_generator_E(n)));

    const DirectSum e2 = standard_generator_E(2);
    for (std::size_t i = 0; i < e2.summands().size(); ++i)
        CHECK_FALSE(is_generator(e2.without(i)));

    const Surface s(2);
    CHECK_FALSE(is_generator(DirectSum(s, {make_arc(reg_point(s, 0, 0), reg_point(s, 0, 2))})));
}

TEST_CASE("minimal generators")
{
    CHECK(is_minimal_generator(standard_generator_E(1)));
    CHECK(is_minimal_generator(standard_generator_E(2)));
    CHECK(is_minimal_generator(standard_generator_E(3)));

    const Surface s(2);
    const DirectSum padded =
        standard_generator_E(2).plus(make_arc(reg_point(s, 1, 0), reg_point(s, 1, 2)));
    CHECK(is_generator(padded));
    CHECK_FALSE(is_minimal_generator(padded));

    // A cycle in the site graph: acc(1) - seg(1) - acc(0) - acc(1).
    const DirectSum looped =
        standard_generator_E(2).plus(make_arc(acc_point(s, 0), reg_point(s, 1, 5)));
    CHECK(is_generator(looped));
    CHECK_FALSE(is_minimal_generator(looped));

    CHECK_THROWS_AS(is_minimal_generator(DirectSum(s, {})), DomainError);
}

TEST_CASE("the fan generator E")
{
    const DirectSum e1 = standard_generator_E(1);
    REQUIRE(e1.summands().size() == 1);
    const Surface s1(1);
    CHECK(e1.summands()[0] == make_arc(acc_point(s1, 1), reg_point(s1, 1, 0)));

    const DirectSum e2 = standard_generator_E(2);
    const Surface s2(2);
    std::vector<Arc> expected = {make_arc(acc_point(s2, 1), reg_point(s2, 1, 0)),
                                 make_arc(acc_point(s2, 1), reg_point(s2, 2, 0)),
                                 make_arc(acc_point(s2, 1), acc_point(s2, 2))};
    std::sort(expected.begin(), expected.end());
    CHECK(e2.summands() == expected);

    for (int n : {1, 2, 3, 4})
        CHECK(has_complete_orbit(standard_generator_E(n)));
}

TEST_CASE("the staircase generators M_d")
{
    CHECK(generator_M(2, 1) == standard_generator_E(2));

    const Surface s2(2);
    std::vector<Arc> expected = {make_arc(acc_point(s2, 1), reg_point(s2, 1, 0)),
                                 make_arc(acc_point(s2, 1), reg_point(s2, 2, 0)),
                                 make_arc(reg_point(s2, 1, 0), acc_point(s2, 2))};
    std::sort(expected.begin(), expected.end());
    CHECK(generator_M(2, 2).summands() == expected);

    for (int n : {2, 3})
        for (int d = 1; d <= 2 * n - 2; ++d)
            CHECK(is_generator(generator_M(n, d)));

    CHECK_THROWS_AS(generator_M(2, 3), DomainError);
    CHECK_THROWS_AS(generator_M(1, 1), DomainError);
    CHECK_THROWS_AS(generator_M(3, 0), DomainError);
}
