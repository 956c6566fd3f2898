#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/shape_enum.hpp"
#include "yhx/shapes.hpp"

using namespace yhx;
using namespace yhx::shapes;

namespace {

RPartition rp(std::vector<std::vector<long>> v) { return RPartition(std::move(v)); }

// Order oracles: reflexive-transitive closure of the covering relations.
// Strong covers swap any two positions; weak covers multiply by one simple
// transposition on the left (swap two adjacent values).
std::vector<std::vector<bool>> order_closure(int n, bool weak) {
    auto perms = all_permutations(n);
    size_t m = perms.size();
    std::map<Perm, size_t> idx;
    for (size_t i = 0; i < m; ++i) idx[perms[i]] = i;
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) leq[i][i] = true;
    for (size_t i = 0; i < m; ++i) {
        auto add_cover = [&](std::vector<int> v) {
            Perm w(std::move(v));
            if (w.length() == perms[i].length() + 1) leq[i][idx[w]] = true;
        };
        if (weak) {
            for (int val = 1; val < n; ++val) {
                auto v = perms[i].one_line();
                for (auto& x : v) {
                    if (x == val - 1)
                        x = val;
                    else if (x == val)
                        x = val - 1;
                }
                add_cover(std::move(v));
            }
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    auto v = perms[i].one_line();
                    std::swap(v[a], v[b]);
                    add_cover(std::move(v));
                }
        }
    }
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < m; ++i)
            if (leq[i][k])
                for (size_t j = 0; j < m; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    return leq;
}

ContentValue cv(Rat u, long a) { return ContentValue(std::move(u), a); }

}  // namespace

TEST_CASE("build_skew: labeling, components, containment") {
    auto s = build_skew(rp({{2, 1}}), rp({{1}}));
    CHECK(s.n() == 2);
    CHECK(s.cc_count() == 2);  // (1,2) and (2,1) share no edge
    CHECK(s.box(0) == Box{0, 2, 1});
    CHECK(s.box(1) == Box{0, 1, 2});

    auto full = build_skew(rp({{2, 2}}), rp({{}}));
    CHECK(full.n() == 4);
    CHECK(full.cc_count() == 1);
    // diagonal order with rows descending inside a diagonal
    CHECK(full.box(0) == Box{0, 2, 1});
    CHECK(full.box(1) == Box{0, 2, 2});
    CHECK(full.box(2) == Box{0, 1, 1});
    CHECK(full.box(3) == Box{0, 1, 2});

    CHECK_THROWS_WITH_AS(build_skew(rp({{1}}), rp({{2}})), doctest::Contains("row 1"), Error);
}

TEST_CASE("place: axioms") {
    auto s = straight_shape(rp({{2, 1}}));
    for (int num = 0; num < 3; ++num) {
        Rat u = make_rat(num, 3);
        auto p = classical_placed(s, {u});
        CHECK(p.contents().size() == 3);
    }
    // both boxes of a row with equal content: rejected
    auto row = straight_shape(rp({{2}}));
    CHECK_THROWS_WITH_AS(place(row, {cv(make_rat(0), 0), cv(make_rat(0), 0)}),
                         doctest::Contains("diagonal"), Error);
    CHECK_THROWS_WITH_AS(place(row, {cv(make_rat(0), 0), cv(make_rat(0), 2)}),
                         doctest::Contains("adjacency"), Error);
    // two single-box components inside one component, phases u and u+1/2
    auto skew2 = build_skew(rp({{2, 1}}), rp({{1}}));
    auto mixed = place(skew2, {cv(make_rat(0), -1), cv(make_rat(1, 2), 1)});
    CHECK(mixed.cyclo_order() == 2);
    // same phase class needs offsets >= 2 apart and monotone
    CHECK_NOTHROW(place(skew2, {cv(make_rat(0), -1), cv(make_rat(0), 1)}));
    CHECK_NOTHROW(place(skew2, {cv(make_rat(0), -1), cv(make_rat(0), 4)}));
    CHECK_THROWS_AS(place(skew2, {cv(make_rat(0), 1), cv(make_rat(0), -1)}), Error);  // monotonicity
    CHECK_THROWS_AS(place(skew2, {cv(make_rat(0), 0), cv(make_rat(0), 1)}), Error);   // adjacency
    // classical contents are accepted for every straight shape and phase
    for (long r = 1; r <= 3; ++r)
        for (const auto& lam : yhx_test::all_r_partitions(r, 3))
            CHECK_NOTHROW(classical_placed(straight_shape(lam),
                                           std::vector<Rat>(r, make_rat(1, 2))));
}

TEST_CASE("enumerate_std matches the brute-force oracle") {
    CHECK(enumerate_std(build_skew(rp({{2, 2}}), rp({{}}))).size() == 2);
    CHECK(enumerate_std(build_skew(rp({{1}, {1}}), rp({{}, {}}))).size() == 2);
    CHECK(enumerate_std(straight_shape(rp({{1, 1}}))).size() == 1);
    for (long r = 1; r <= 2; ++r)
        for (long n = 0; n <= 4; ++n)
            for (const auto& s : yhx_test::all_r_skew_shapes(r, n)) {
                auto tabs = enumerate_std(s);
                CHECK(static_cast<long>(tabs.size()) == yhx_test::std_count_oracle(s));
                std::set<StandardTableau> uniq(tabs.begin(), tabs.end());
                CHECK(uniq.size() == tabs.size());
            }
}

TEST_CASE("tableau_to_permutation") {
    // row reading tableau of a straight row is the identity
    auto row2 = straight_shape(rp({{2}}));
    CHECK(tableau_to_permutation(row2, row_reading_tableau(row2)) == Perm::identity(2));

    // ((2,2)): labels are (2,1),(2,2),(1,1),(1,2); tableau [1,2],[3,4] gives 3,4,1,2
    auto sq = straight_shape(rp({{2, 2}}));
    StandardTableau t({3, 4, 1, 2});
    REQUIRE(is_standard(sq, t));
    CHECK(tableau_to_permutation(sq, t) == Perm({2, 3, 0, 1}));
    // [1,3],[2,4] exchanges the middle labels
    StandardTableau t2({2, 4, 1, 3});
    REQUIRE(is_standard(sq, t2));
    CHECK(tableau_to_permutation(sq, t2) == Perm({1, 3, 0, 2}));

    // r=2 single boxes, 1 placed in component 2
    auto two = build_skew(rp({{1}, {1}}), rp({{}, {}}));
    StandardTableau swapped({2, 1});
    REQUIRE(is_standard(two, swapped));
    CHECK(tableau_to_permutation(two, swapped) == Perm({1, 0}));
}

TEST_CASE("bruhat_leq and weak_leq agree with the closure oracles") {
    for (int n = 2; n <= 4; ++n) {
        auto perms = all_permutations(n);
        auto strong = order_closure(n, false);
        auto weak = order_closure(n, true);
        for (size_t i = 0; i < perms.size(); ++i)
            for (size_t j = 0; j < perms.size(); ++j) {
                CHECK(bruhat_leq(perms[i], perms[j]) == strong[i][j]);
                CHECK(weak_leq(perms[i], perms[j]) == weak[i][j]);
            }
    }
}

TEST_CASE("bruhat_interval: named examples") {
    auto sq = straight_shape(rp({{2, 2}}));
    auto rep = bruhat_interval(sq);
    CHECK(rep.std_count == 2);
    CHECK(rep.interval_size == 2);
    CHECK(rep.match);

    auto row = straight_shape(rp({{4}}));
    rep = bruhat_interval(row);
    CHECK(rep.w_col == rep.w_row);
    CHECK(rep.interval_size == 1);
    CHECK(rep.match);

    rep = bruhat_interval(build_skew(rp({{2, 1}}), rp({{1}})));
    CHECK(rep.interval_size == 2);
    CHECK(rep.match);
}

TEST_CASE("bruhat bijection holds on all r-skew shapes with n <= 4") {
    for (long r = 1; r <= 2; ++r)
        for (long n = 1; n <= 4; ++n)
            for (const auto& s : yhx_test::all_r_skew_shapes(r, n)) {
                auto rep = bruhat_interval(s);
                CHECK(rep.match);
            }
}

TEST_CASE("apply_transposition") {
    auto s = straight_shape(rp({{2, 1}}));
    // labels: (2,1) d=-1, (1,1) d=0, (1,2) d=1
    StandardTableau t({3, 1, 2});  // rows [1,2],[3]
    REQUIRE(is_standard(s, t));
    CHECK(!apply_transposition(s, t, 1).has_value());  // 1,2 share a row
    auto t2 = apply_transposition(s, t, 2);
    REQUIRE(t2.has_value());
    CHECK(t2->entries() == std::vector<int>{2, 1, 3});  // rows [1,3],[2]
    auto back = apply_transposition(s, *t2, 2);
    REQUIRE(back.has_value());
    CHECK(*back == t);  // involution where defined

    auto col = straight_shape(rp({{1, 1}}));
    CHECK(!apply_transposition(col, StandardTableau({2, 1}), 1).has_value());
}

TEST_CASE("weight_of and injectivity") {
    auto s = straight_shape(rp({{2, 1}}));
    auto p = classical_placed(s, {make_rat(1, 3)});
    StandardTableau t({3, 1, 2});  // rows [1,2],[3]
    auto w = weight_of(p, t);
    CHECK(w.comp == std::vector<int>{1, 1, 1});
    CHECK(w.content[0] == cv(make_rat(1, 3), 0));
    CHECK(w.content[1] == cv(make_rat(1, 3), 1));
    CHECK(w.content[2] == cv(make_rat(1, 3), -1));

    auto two = build_skew(rp({{1}, {1}}), rp({{}, {}}));
    auto ptwo = classical_placed(two, {make_rat(0), make_rat(0)});
    auto tabs = enumerate_std(two);
    CHECK(weight_of(ptwo, tabs[0]).comp != weight_of(ptwo, tabs[1]).comp);

    // exhaustive injectivity at n <= 4
    for (long r = 1; r <= 2; ++r)
        for (long n = 1; n <= 4; ++n)
            for (const auto& sh : yhx_test::all_r_skew_shapes(r, n)) {
                std::vector<Rat> phases;
                for (long h = 0; h < r; ++h) phases.push_back(make_rat(h, r + 1));
                auto placed = classical_placed(sh, phases);
                std::set<Weight> seen;
                for (const auto& tab : enumerate_std(sh)) seen.insert(weight_of(placed, tab));
                CHECK(seen.size() == enumerate_std(sh).size());
            }
}

TEST_CASE("canonical placed form identifies translated components") {
    // two identical boxes at phases u and u-1/2, realized at two diagonal gaps
    auto sA = build_skew(rp({{2, 1}}), rp({{1}}));
    auto sB = build_skew(rp({{3, 1}}), rp({{2}}));  // boxes at diagonals -1 and 2
    auto pA = place(sA, {cv(make_rat(0), 0), cv(make_rat(1, 2), 0)});
    auto pB = place(sB, {cv(make_rat(0), 0), cv(make_rat(1, 2), 0)});
    CHECK(placed_canonical_form(pA) == placed_canonical_form(pB));
    auto pC = place(sA, {cv(make_rat(0), 0), cv(make_rat(1, 2), 1)});
    CHECK(placed_canonical_form(pA) != placed_canonical_form(pC));
}
