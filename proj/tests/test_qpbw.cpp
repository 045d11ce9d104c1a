#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degcone/qpbw.hpp"

#include <set>

using namespace degcone;

static StrictCone reference_cone(const RootSystem& rs, std::vector<std::vector<long>> rows) {
    StrictCone c;
    c.ambient = rs.labels;
    for (auto& r : rows) {
        LinearForm f;
        f.a = r;
        c.add_form(std::move(f));
    }
    c.dedupe_and_sort();
    return c;
}

TEST_CASE("A2: PBW root vector and straightening relation") {
    RootSystem rs(CartanType{'A', 2});
    QEngine<ExactQ> eng(rs, ExactQ{});
    auto co = convex_order(rs, ReducedWord::parse("121"));
    auto roots = eng.pbw_root_vectors(co);

    // F_{a1+a2} = T_1(F_2) = F_2 F_1 - q F_1 F_2
    REQUIRE(roots[1].size() == 2);
    CanonWord w21, w12;
    w21.fw = {1, 0};
    w21.k.assign(2, 0);
    w12.fw = {0, 1};
    w12.k.assign(2, 0);
    CHECK(roots[1].at(w21) == ExactQ::one());
    CHECK(roots[1].at(w12) == ExactQ::zero() - ExactQ::q_pow(1));

    // F_{22} F_{11} = q F_{11} F_{22} + F_{12}
    auto rel = ls_relation(eng, co, roots, 0, 2);
    CHECK(rel.qpow == 1);
    REQUIRE(rel.terms.size() == 1);
    auto& [s, c] = *rel.terms.begin();
    CHECK(s == std::vector<long>{0, 1, 0});
    CHECK(c == ExactQ::one());

    // adjacent pairs straighten with no middle term
    CHECK(ls_relation(eng, co, roots, 0, 1).terms.empty());
    CHECK(ls_relation(eng, co, roots, 1, 2).terms.empty());
}

TEST_CASE("A2: quantum cone equals the classical cone") {
    RootSystem rs(CartanType{'A', 2});
    auto co = convex_order(rs, ReducedWord::parse("121"));
    auto qc = quantum_cone_exact(rs, co);
    REQUIRE(qc.cone.forms.size() == 1);
    CHECK(qc.cone.forms[0].a == std::vector<long>{1, -1, 1});
    CHECK(cone_equal(qc.cone, classical_cone(rs)));

    // the other reduced word gives the same cone
    auto co2 = convex_order(rs, ReducedWord::parse("212"));
    auto qc2 = quantum_cone_exact(rs, co2);
    CHECK(cone_equal(qc.cone, qc2.cone));
}

TEST_CASE("C2: the six straightening relations of the order 1212") {
    RootSystem rs(CartanType{'C', 2});
    QEngine<ExactQ> eng(rs, ExactQ{});
    auto co = convex_order(rs, ReducedWord::parse("1212"));
    auto roots = eng.pbw_root_vectors(co);
    // order: F11, F11~, F12, F22 at positions 0..3

    auto r01 = ls_relation(eng, co, roots, 0, 1);   // F11~ F11 = q^{-2} F11 F11~
    CHECK(r01.qpow == -2);
    CHECK(r01.terms.empty());

    auto r02 = ls_relation(eng, co, roots, 0, 2);   // F12 F11 = F11 F12 + [2]_q F11~
    CHECK(r02.qpow == 0);
    REQUIRE(r02.terms.size() == 1);
    CHECK(r02.terms.begin()->first == std::vector<long>{0, 1, 0, 0});
    CHECK(r02.terms.begin()->second == ExactQ{}.qint_s(2, 1));

    auto r03 = ls_relation(eng, co, roots, 0, 3);   // F22 F11 = q^2 F11 F22 + F12
    CHECK(r03.qpow == 2);
    REQUIRE(r03.terms.size() == 1);
    CHECK(r03.terms.begin()->first == std::vector<long>{0, 0, 1, 0});
    CHECK(r03.terms.begin()->second == ExactQ::one());

    auto r12 = ls_relation(eng, co, roots, 1, 2);   // q-commute
    CHECK(r12.qpow == -2);
    CHECK(r12.terms.empty());

    // F22 F11~ = F11~ F22 - (1 - q^{-2}) F12^{(2)}
    auto r13 = ls_relation(eng, co, roots, 1, 3);
    CHECK(r13.qpow == 0);
    REQUIRE(r13.terms.size() == 1);
    CHECK(r13.terms.begin()->first == std::vector<long>{0, 0, 2, 0});
    QFun expect = (ExactQ::one() - ExactQ::q_pow(-2)) / ExactQ{}.qint_s(2, 1);
    CHECK(r13.terms.begin()->second == ExactQ::zero() - expect);

    auto r23 = ls_relation(eng, co, roots, 2, 3);
    CHECK(r23.qpow == -2);
    CHECK(r23.terms.empty());
}

TEST_CASE("C2: quantum cone matches the printed inequalities") {
    RootSystem rs(CartanType{'C', 2});
    auto co = convex_order(rs, ReducedWord::parse("1212"));
    auto qc = quantum_cone_exact(rs, co);
    // canonical order a11, a11~, a12, a22
    auto expect = reference_cone(rs, {{1, 0, -1, 1},    // d11 + d22 > d12
                                  {1, -1, 1, 0},    // d11 + d12 > d11~
                                  {0, 1, -2, 1}});  // d11~ + d22 > 2 d12
    std::set<std::vector<long>> have, want;
    for (auto& f : qc.cone.forms) have.insert(f.a);
    for (auto& f : expect.forms) want.insert(f.a);
    CHECK(have == want);
    // strictly inside the classical cone
    CHECK(cone_subset(qc.cone, classical_cone(rs)));
    CHECK(!cone_equal(qc.cone, classical_cone(rs)));
    // the degree (1,1,1,2) lies in the quantum cone
    CHECK(contains(qc.cone, {1, 1, 1, 2}));
}

TEST_CASE("G2: quantum cone for both reduced words") {
    RootSystem rs(CartanType{'G', 2});
    auto co1 = convex_order(rs, ReducedWord::parse("121212"));
    auto qc1 = quantum_cone_exact(rs, co1);
    // canonical order 1, 1112, 112, 11122, 12, 2; the printed inequalities
    // describe the quantum cone inside the classical cone
    auto expect = reference_cone(rs, {{1, 0, -2, 1, 0, 0},    // d1 + d11122 > 2 d112
                                  {0, 1, -3, 1, 0, 0},    // d1112 + d11122 > 3 d112
                                  {0, 1, -2, 0, 1, 0},    // d1112 + d12 > 2 d112
                                  {0, 1, -1, 0, -1, 1},   // d1112 + d2 > d112 + d12
                                  {0, 0, 1, 0, -2, 1},    // d112 + d2 > 2 d12
                                  {0, 0, 0, 1, -3, 1}});  // d11122 + d2 > 3 d12
    for (auto& f : classical_cone(rs).forms) expect.add_form(f);
    expect.dedupe_and_sort();
    CHECK(cone_equal(qc1.cone, expect));
    // every printed inequality appears verbatim among the computed forms
    std::set<std::vector<long>> have;
    for (auto& f : qc1.cone.forms) have.insert(f.a);
    for (auto& f : expect.forms) CHECK(have.count(f.a) == 1);
    CHECK(cone_subset(qc1.cone, classical_cone(rs)));
    CHECK(!cone_equal(qc1.cone, classical_cone(rs)));

    auto co2 = convex_order(rs, ReducedWord::parse("212121"));
    auto qc2 = quantum_cone_exact(rs, co2);
    CHECK(cone_equal(qc1.cone, qc2.cone));
}

TEST_CASE("exact and specialized modes agree on rank-2 supports") {
    for (auto& [t, word] : std::vector<std::pair<CartanType, std::string>>{
             {{'A', 2}, "121"}, {{'C', 2}, "1212"}, {{'G', 2}, "121212"}}) {
        RootSystem rs(t);
        auto co = convex_order(rs, ReducedWord::parse(word));
        auto ex = quantum_cone_exact(rs, co);
        auto sp = quantum_cone_specialized(rs, co, 20260824);
        REQUIRE(ex.relations.size() == sp.relations.size());
        for (long k = 0; k < (long)ex.relations.size(); ++k)
            CHECK(ex.relations[k].supports == sp.relations[k].supports);
        std::set<std::vector<long>> a, b;
        for (auto& f : ex.cone.forms) a.insert(f.a);
        for (auto& f : sp.cone.forms) b.insert(f.a);
        CHECK(a == b);
    }
}

TEST_CASE("A3: contradictory relations for the two words of 6.2") {
    RootSystem rs(CartanType{'A', 3});
    auto co1 = convex_order(rs, ReducedWord::parse("121321"));
    auto qc1 = quantum_cone_specialized(rs, co1, 7);
    // order: a11, a12, a22, a13, a23, a33; canonical: a11,a12,a13,a22,a23,a33
    // F23 F12 = F12 F23 - (q - q^{-1}) F22 F13  =>  d12 + d23 > d22 + d13
    LinearForm f1;
    f1.a = {0, 1, -1, -1, 1, 0};
    CHECK(std::count(qc1.cone.forms.begin(), qc1.cone.forms.end(), f1) == 1);
    CHECK(!is_empty(qc1.cone).empty);

    auto co2 = convex_order(rs, ReducedWord::parse("132312"));
    auto qc2 = quantum_cone_specialized(rs, co2, 7);
    LinearForm f2;
    f2.a = {0, -1, 1, 1, -1, 0};  // d13 + d22 > d12 + d23
    CHECK(std::count(qc2.cone.forms.begin(), qc2.cone.forms.end(), f2) == 1);
    CHECK(!is_empty(qc2.cone).empty);

    CHECK(is_empty_joint(qc1.cone, qc2.cone).empty);
}
