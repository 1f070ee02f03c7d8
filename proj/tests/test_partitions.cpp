#include <doctest.h>

#include <random>

#include "cae/homology.hpp"
#include "cae/partitions.hpp"

using namespace cae;

namespace {

Partition P(int m, const std::vector<std::vector<int>>& blocks)
{
    return make_partition(m, blocks);
}

}  // namespace

TEST_CASE("non-crossing predicate")
{
    CHECK_FALSE(is_noncrossing(P(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(P(4, {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(P(4, {})));
}

TEST_CASE("meet")
{
    CHECK(meet_nnc(P(4, {{1, 2, 3}}), P(4, {{2, 4}})) == P(4, {{2}}));
    const Partition p = P(5, {{1, 2}, {4, 5}});
    CHECK(meet_nnc(p, p) == p);
    CHECK(meet_nnc(p, P(5, {})) == P(5, {}));
}

TEST_CASE("join")
{
    CHECK(join_nnc(P(4, {{1, 3}}), P(4, {{2, 4}})) == P(4, {{1, 2, 3, 4}}));
    const Partition p = P(4, {{1, 4}, {2, 3}});
    CHECK(join_nnc(p, p) == p);
    CHECK(join_nnc(P(4, {{1, 2}}), P(4, {{3}})) == P(4, {{1, 2}, {3}}));
}

TEST_CASE("join equals the finest non-crossing common coarsening")
{
    for (int m : {4, 5}) {
        const auto all = enumerate_nnc(m);
        std::mt19937 rng(97);
        for (int trial = 0; trial < 60; ++trial) {
            const Partition& p = all[rng() % all.size()];
            const Partition& q = all[rng() % all.size()];
            const Partition j = join_nnc(p, q);
            CHECK(is_noncrossing(j));
            CHECK(partition_leq(p, j));
            CHECK(partition_leq(q, j));
            for (const Partition& r : all)
                if (partition_leq(p, r) && partition_leq(q, r))
                    CHECK(partition_leq(j, r));
        }
    }
}

TEST_CASE("eta drops even singletons")
{
    CHECK(eta(P(4, {{1, 2, 3}, {4}})) == P(4, {{1, 2, 3}}));
    const Partition fix = P(4, {{1, 2}, {3}});
    CHECK(eta(fix) == fix);
    CHECK(eta(P(4, {{2}})) == P(4, {}));
}

TEST_CASE("even-exclusive lattice operations")
{
    CHECK(meet_e(P(4, {{1, 2, 3}}), P(4, {{2, 4}})) == P(4, {}));
    const Partition top = P(4, {{1, 2, 3, 4}});
    const Partition p = P(4, {{1, 2}});
    CHECK(meet_e(p, top) == p);
    CHECK(join_e(p, P(4, {{3, 4}})) == P(4, {{1, 2}, {3, 4}}));
    // Joins only coarsen, so even singletons never reappear.
    for (const Partition& a : enumerate_ennc(4))
        for (const Partition& b : enumerate_ennc(4))
            CHECK(is_even_exclusive(join_e(a, b)));
}

TEST_CASE("zeta doubles the ground set onto odd positions")
{
    CHECK(zeta(P(2, {{1, 2}})) == P(4, {{1, 3}}));
    CHECK(zeta(P(3, {})) == P(6, {}));
    CHECK(zeta(P(3, {{1}, {3}})) == P(6, {{1}, {5}}));
    // zeta lands in the even-exclusive sublattice: eta fixes its image.
    for (const Partition& p : enumerate_nnc(4)) {
        const Partition z = zeta(p);
        CHECK(is_even_exclusive(z));
        CHECK(eta(z) == z);
        CHECK(is_noncrossing(z));
    }
}

TEST_CASE("refinement order")
{
    CHECK(partition_leq(P(4, {{1}}), P(4, {{1, 3}})));
    const auto all = enumerate_ennc(4);
    for (const Partition& p : all)
        for (const Partition& q : all) {
            CHECK(partition_leq(p, join_e(p, q)));
            CHECK(partition_leq(meet_e(p, q), p));
        }
}

TEST_CASE("membership in a partition subcategory")
{
    const Surface s(2);
    const Partition top = P(4, {{1, 2, 3, 4}});
    const Arc lim = make_arc(acc_point(s, 1), reg_point(s, 1, 5));
    CHECK(thick_membership(lim, P(4, {{2, 3}}), s));  // sites {2, 3}
    CHECK(thick_membership(lim, top, s));
    CHECK_FALSE(thick_membership(lim, P(4, {{2}, {3}}), s));
}

TEST_CASE("thick closure of objects")
{
    const Surface s2(2);
    const Arc shrt = make_arc(reg_point(s2, 1, 0), reg_point(s2, 1, 2));
    CHECK(thick_closure(DirectSum(s2, {shrt})) == P(4, {{3}}));  // odd singleton

    for (int n : {1, 2, 3})
        CHECK(thick_closure(standard_generator_E(n)) ==
              P(2 * n, {[&] {
                  std::vector<int> all;
                  for (int i = 1; i <= 2 * n; ++i)
                      all.push_back(i);
                  return all;
              }()}));
}

TEST_CASE("thick closure matches the three-component picture on six sites")
{
    // X, Y, Z long arcs in C_6 landing at sites {3,6}, {4,5}, {1,2} after
    // the localisation onto three accumulation points.
    const Surface source(6);
    const Surface target(3);
    const Arc x = *localize(make_arc(reg_point(source, 6, 0), reg_point(source, 3, 0)), source);
    const Arc y = *localize(make_arc(reg_point(source, 4, 0), reg_point(source, 5, 0)), source);
    const Arc z = *localize(make_arc(reg_point(source, 1, 0), reg_point(source, 2, 0)), source);
    const Partition closure = thick_closure(DirectSum(target, {x, y, z}));
    CHECK(closure == P(6, {{1, 2}, {3, 6}, {4, 5}}));
}

TEST_CASE("localisation collapses a closure exactly through eta")
{
    // A, B, C, D on six segments: components {1,3,6}, {4,5}, {2}; the short
    // arc D dies under the localisation and its even singleton under eta.
    const Surface source(6);
    const Surface target(3);
    const Arc a = make_arc(reg_point(source, 6, 0), reg_point(source, 3, 0));
    const Arc b = make_arc(reg_point(source, 4, 0), reg_point(source, 5, 0));
    const Arc c = make_arc(reg_point(source, 1, 0), reg_point(source, 3, 2));
    const Arc d = make_arc(reg_point(source, 2, 0), reg_point(source, 2, 2));

    const Partition upstairs = P(6, {{1, 3, 6}, {2}, {4, 5}});

    CHECK_FALSE(localize(d, source).has_value());
    std::vector<Arc> images;
    for (const Arc& arc : {a, b, c})
        images.push_back(*localize(arc, source));
    const Partition downstairs = thick_closure(DirectSum(target, images));
    CHECK(downstairs == eta(upstairs));
    CHECK(downstairs == P(6, {{1, 3, 6}, {4, 5}}));
}

TEST_CASE("counting formulas match enumeration")
{
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(nnc_count(1) == 2);
    CHECK(nnc_count(2) == 5);
    CHECK(nnc_count(3) == 15);
    CHECK(nnc_count(4) == 51);
    CHECK(ennc_count(2) == 3);
    CHECK(ennc_count(4) == 26);

    CHECK(enumerate_nnc(1).size() == 2);
    CHECK(enumerate_ennc(2).size() == 3);
    for (const Partition& p : enumerate_ennc(4)) {
        CHECK(is_noncrossing(p));
        CHECK(is_even_exclusive(p));
    }
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_nnc(11), DomainError);
    CHECK_NOTHROW(enumerate_nnc(4, 4));
}
