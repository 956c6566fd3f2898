#include <doctest.h>

#include "support/shape_enum.hpp"
#include "yhx/algebra.hpp"
#include "yhx/calrep.hpp"

using namespace yhx;
using namespace yhx::algebra;
using namespace yhx::calrep;
using namespace yhx::shapes;

namespace {
RPartition rp(std::vector<std::vector<long>> v) { return RPartition(std::move(v)); }
}  // namespace

TEST_CASE("defining_relations: instantiation") {
    // r=1, n=2: the quadratic relation collapses to g^2 - 1 - (q-q^{-1}) g
    auto rels = defining_relations(1, 2, Flavor::affineYH);
    const Relation* quad = nullptr;
    for (const auto& rel : rels.relations)
        if (rel.name == "g_quad(1)") quad = &rel;
    REQUIRE(quad != nullptr);
    REQUIRE(quad->terms.size() == 3);
    CHECK(quad->terms[2].word == std::vector<GenSym>{g_(1)});
    CHECK(quad->terms[2].coeff.qq == 1);
    CHECK(quad->terms[2].coeff.rat == make_rat(-1));

    // r=2, n=2 contains the mixed relation and, in the degenerate flavor, the
    // cross relation f_1 x_2 - x_1 f_1 - e_1
    auto rels2 = defining_relations(2, 2, Flavor::affineYH);
    bool found_mixed = false;
    for (const auto& rel : rels2.relations)
        if (rel.name == "g1_X1_g1_X1") found_mixed = true;
    CHECK(found_mixed);
    auto relsd = defining_relations(2, 2, Flavor::degenerateYH);
    const Relation* cross = nullptr;
    for (const auto& rel : relsd.relations)
        if (rel.name == "f_x_cross(1)") cross = &rel;
    REQUIRE(cross != nullptr);
    CHECK(cross->terms.size() == 4);  // fx, -xf, -(1/2) 1, -(1/2) t1 t2
}

TEST_CASE("check_relations on built modules, plus a falsifiability probe") {
    auto placed = classical_placed(straight_shape(rp({{2, 1}})), {make_rat(0)});
    auto m = build_module(placed);
    auto rels = defining_relations(1, 3, Flavor::affineYH);
    auto report = check_relations(m.rep, rels);
    CHECK(report.all_pass);

    // perturb one matrix entry: the quadratic relation must fail
    auto broken = m.rep;
    auto g1 = broken.get(g_(1));
    g1.at(0, 0) = g1.at(0, 0) + TowerScalar::one();
    broken.set(g_(1), std::move(g1));
    auto bad = check_relations(broken, rels);
    CHECK(!bad.all_pass);
    bool quad_failed = false;
    for (const auto& item : bad.items)
        if (item.name == "g_quad(1)" && !item.pass) quad_failed = true;
    CHECK(quad_failed);
}

TEST_CASE("check_relations: n=1 scalar representation") {
    MatrixRep<TowerScalar> rep;
    rep.r = 3;
    rep.n = 1;
    rep.dim = 1;
    rep.zero = TowerScalar::zero();
    rep.one = TowerScalar::one();
    Matrix<TowerScalar> t1(1, 1, rep.zero), X1(1, 1, rep.zero), X1i(1, 1, rep.zero);
    t1.at(0, 0) = TowerScalar::from_cyclo(scalars::Cyclo::root_of_unity(3));
    X1.at(0, 0) = TowerScalar::q_power(4);
    X1i.at(0, 0) = TowerScalar::q_power(-4);
    rep.set(t_(1), t1);
    rep.set(X_(1), X1);
    rep.set(Xinv_(1), X1i);
    CHECK(check_relations(rep, defining_relations(3, 1, Flavor::affineYH)).all_pass);
}

TEST_CASE("derived_elements identity suite") {
    for (auto [r, outer] : std::vector<std::pair<long, std::vector<std::vector<long>>>>{
             {1, {{2, 1}}}, {2, {{1}, {1, 1}}}, {3, {{1}, {1}, {1}}}}) {
        std::vector<Rat> phases;
        for (long h = 0; h < r; ++h) phases.push_back(make_rat(h, r + 1));
        auto m = build_module(classical_placed(straight_shape(rp(outer)), phases));
        auto der = derived_elements(m.rep);
        CHECK(der.report.all_pass);
        if (!der.report.all_pass)
            for (auto& f : der.report.failures()) MESSAGE(f);
        // e_1 on a calibrated module is 1 on equal components, 0 otherwise
        const auto& e1 = der.e.at({1, 2});
        for (long b = 0; b < m.dim(); ++b) {
            TowerScalar want = m.tcomp[b][0] == m.tcomp[b][1] ? TowerScalar::one()
                                                              : TowerScalar::zero();
            CHECK(e1.at(b, b) == want);
        }
    }
}

TEST_CASE("central_check") {
    auto m1 = build_module(classical_placed(straight_shape(rp({{2, 1}})), {make_rat(0)}));
    SymLaurent sym;
    sym.terms.push_back({make_rat(1), {1, 0, 0}, {0, 0, 0}});
    sym.terms.push_back({make_rat(1), {0, 1, 0}, {0, 0, 0}});
    sym.terms.push_back({make_rat(1), {0, 0, 1}, {0, 0, 0}});
    CHECK(central_check(m1.rep, sym));  // X_1 + X_2 + X_3

    auto m2 = build_module(
        classical_placed(straight_shape(rp({{1}, {1}})), {make_rat(0), make_rat(1, 3)}));
    SymLaurent tsum;
    tsum.terms.push_back({make_rat(1), {0, 0}, {1, 0}});
    tsum.terms.push_back({make_rat(1), {0, 0}, {0, 1}});
    CHECK(central_check(m2.rep, tsum));  // t_1 + t_2

    SymLaurent bad;
    bad.terms.push_back({make_rat(1), {1, 0}, {0, 0}});  // X_1 alone
    CHECK_THROWS_AS(central_check(m2.rep, bad), Error);
}
