#include <doctest.h>

#include "support/shape_enum.hpp"
#include "yhx/clifford.hpp"

using namespace yhx;
using namespace yhx::clifford;
using namespace yhx::shapes;

namespace {
RPartition rp(std::vector<std::vector<long>> v) { return RPartition(std::move(v)); }
ContentValue cv(Rat u, long a) { return ContentValue(std::move(u), a); }

// two single-box connected components with phases u and u - 1/2
PlacedShape symmetric_pair(Rat u, long offset = 0) {
    auto sh = build_skew(rp({{2, 1}}), rp({{1}}));
    return place(sh, {cv(u, offset), cv(u - make_rat(1, 2), offset)});
}
}  // namespace

TEST_CASE("twist_shape is an action of order p on phases") {
    auto single = classical_placed(straight_shape(rp({{1}})), {make_rat(0)});
    auto t1 = twist_shape(single, 2, 1);
    CHECK(t1.content(0) == cv(make_rat(1, 2), 0));
    CHECK(twist_shape(single, 2, 2) == single);

    auto s = classical_placed(straight_shape(rp({{2, 1}})), {make_rat(1, 3)});
    for (long p : {2L, 3L, 5L}) {
        auto a = twist_shape(twist_shape(s, p, 1), p, 2);
        CHECK(a == twist_shape(s, p, 3));
        auto cur = s;
        for (long m = 1; m < p; ++m) {
            cur = twist_shape(cur, p, 1);
            CHECK(!(cur == s));
        }
        CHECK(twist_shape(cur, p, 1) == s);
    }
}

TEST_CASE("twisted module eigenvalues are scaled by zeta_p^{-1}") {
    auto placed = symmetric_pair(make_rat(1, 2));
    auto m = calrep::build_module(placed);
    auto mt = calrep::build_module(twist_shape(placed, 2, 1));
    long order = lcm_long(m.cyclo_order, 2);
    auto zinv = scalars::TowerScalar::from_cyclo(
        scalars::Cyclo::root_of_unity(order, order - order / 2));
    // compare weight multisets: scaled original vs twisted
    std::vector<std::vector<scalars::TowerScalar>> scaled;
    for (const auto& nus : m.nu) {
        std::vector<scalars::TowerScalar> row;
        for (const auto& v : nus) row.push_back(v * zinv);
        scaled.push_back(row);
    }
    size_t matched = 0;
    std::vector<bool> used(mt.nu.size(), false);
    for (const auto& row : scaled)
        for (size_t i = 0; i < mt.nu.size(); ++i)
            if (!used[i] && mt.nu[i] == row) {
                used[i] = true;
                ++matched;
                break;
            }
    CHECK(matched == scaled.size());
}

TEST_CASE("stabilizer") {
    auto single = classical_placed(straight_shape(rp({{1}})), {make_rat(0)});
    for (long p : {2L, 3L, 5L}) {
        auto st = stabilizer(single, p);
        CHECK(st.k == p);
        CHECK(st.order == 1);
    }

    auto sym = symmetric_pair(make_rat(1, 2));
    auto st = stabilizer(sym, 2);
    CHECK(st.k == 1);
    CHECK(st.order == 2);

    auto straight = classical_placed(straight_shape(rp({{2, 1}})), {make_rat(0)});
    auto st3 = stabilizer(straight, 3);
    CHECK(st3.order == 1);

    // p = 4 with fixing power 2: identical boxes at phases u and u - 1/2
    auto st4 = stabilizer(sym, 4);
    CHECK(st4.k == 2);
    CHECK(st4.order == 2);
}

TEST_CASE("clifford_split: trivial stabilizer keeps the module whole") {
    auto single = calrep::build_module(
        classical_placed(straight_shape(rp({{1}})), {make_rat(0)}));
    auto split = clifford_split(single, 2);
    CHECK(split.stab.order == 1);
    REQUIRE(split.components.size() == 1);
    CHECK(split.components[0].dimension == 1);
    CHECK(split.report.all_pass);
}

TEST_CASE("clifford_split: two-box phase-symmetric p=2 example") {
    auto m = calrep::build_module(symmetric_pair(make_rat(1, 2)));
    REQUIRE(m.dim() == 2);
    auto split = clifford_split(m, 2);
    CHECK(split.stab.order == 2);
    REQUIRE(split.components.size() == 2);
    CHECK(split.components[0].dimension == 1);
    CHECK(split.components[1].dimension == 1);
    CHECK(split.report.all_pass);
    if (!split.report.all_pass)
        for (auto& f : split.report.failures()) MESSAGE(f);
    for (const auto& comp : split.components) CHECK(comp.connected);
}

TEST_CASE("clifford_split: larger symmetric shapes") {
    // four single boxes at phases u, u-1/4, u-1/2, u-3/4 with equal offsets:
    // |K| = 4 under p = 4, and the 4! /... = 24-dim module splits evenly
    auto sh = build_skew(rp({{4, 3, 2, 1}}), rp({{3, 2, 1}}));
    auto placed = place(sh, {cv(make_rat(3, 4), 0), cv(make_rat(1, 2), 0), cv(make_rat(1, 4), 0),
                             cv(make_rat(0), 0)});
    auto m = calrep::build_module(placed);
    REQUIRE(m.dim() == 24);
    auto st = stabilizer(placed, 4);
    CHECK(st.order == 4);
    auto split = clifford_split(m, 4);
    CHECK(split.report.all_pass);
    long total = 0;
    for (const auto& comp : split.components) {
        CHECK(comp.dimension == 6);
        total += comp.dimension;
    }
    CHECK(total == 24);

    // mixed case: p = 4 but only sigma^2 fixes (phases u, u-1/2)
    auto m2 = calrep::build_module(symmetric_pair(make_rat(1, 2)));
    auto split2 = clifford_split(m2, 4);
    CHECK(split2.stab.k == 2);
    CHECK(split2.stab.order == 2);
    CHECK(split2.report.all_pass);
    CHECK(split2.components.size() == 2);
}

TEST_CASE("count_ydp_simples") {
    // one orbit {((1),{}), ({},(1))}, trivial stabilizer
    auto c1 = count_ydp_simples(1, 2, 2, 1);
    REQUIRE(c1.orbits.size() == 1);
    CHECK(c1.orbits[0].f == 2);
    CHECK(c1.orbits[0].order == 1);
    CHECK(c1.total_indices == 1);

    // ((1),(1)) is sigma-fixed with |K| = 2
    auto c2 = count_ydp_simples(1, 2, 2, 2);
    bool found_fixed = false;
    for (const auto& orb : c2.orbits) {
        if (orb.rep[0][0] == std::vector<long>{1} && orb.rep[0][1] == std::vector<long>{1}) {
            found_fixed = true;
            CHECK(orb.f == 1);
            CHECK(orb.order == 2);
            CHECK(orb.indices == std::vector<long>{0, 1});
        }
    }
    CHECK(found_fixed);
    CHECK(c2.orbits.size() == 3);
    CHECK(c2.total_indices == 4);

    // n = 0: the empty lambda has full stabilizer
    for (long p : {2L, 3L}) {
        auto c0 = count_ydp_simples(2, p, p, 0);
        REQUIRE(c0.orbits.size() == 1);
        CHECK(c0.orbits[0].order == p);
        CHECK(c0.total_indices == p);
    }

    CHECK_THROWS_AS(count_ydp_simples(1, 3, 2, 1), Error);  // p must divide d
}
