#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degcone/poly.hpp"

#include <set>

using namespace degcone;

static std::vector<std::string> path_labels(const RootSystem& rs, const DyckPath& p) {
    std::vector<std::string> out;
    for (auto& v : p.roots) out.push_back(rs.labels[rs.root_index(v)]);
    return out;
}

TEST_CASE("Dyck paths of A2") {
    RootSystem rs(CartanType{'A', 2});
    auto paths = dyck_paths(rs);
    std::set<std::vector<std::string>> got;
    for (auto& p : paths) got.insert(path_labels(rs, p));
    std::set<std::vector<std::string>> expect = {
        {"a_{1,1}"},
        {"a_{2,2}"},
        {"a_{1,1}", "a_{1,2}", "a_{2,2}"},
    };
    CHECK(got == expect);
    CHECK(paths.size() == expect.size());
}

TEST_CASE("Dyck paths of A3 run between simple roots") {
    RootSystem rs(CartanType{'A', 3});
    auto paths = dyck_paths(rs);
    CHECK(paths.size() == 7);
    for (auto& p : paths) {
        CHECK(rs.height(p.roots.front()) == 1);
        CHECK(rs.height(p.roots.back()) == 1);
        if (p.i == 1 && p.j == 3) CHECK(p.roots.size() == 5);
    }
}

TEST_CASE("symplectic Dyck paths of C2") {
    RootSystem rs(CartanType{'C', 2});
    auto paths = dyck_paths(rs);
    std::set<std::vector<std::string>> got;
    for (auto& p : paths) got.insert(path_labels(rs, p));
    std::set<std::vector<std::string>> expect = {
        {"a_{1,1}"},
        {"a_{2,2}"},
        {"a_{1,1}", "a_{1,2}", "a_{2,2}"},
        {"a_{1,1}", "a_{1,2}", "a_{1,1~}"},
    };
    CHECK(got == expect);
    // barred ends are exactly the anti-diagonal ones
    for (auto& p : paths)
        CHECK(p.bar_end == (rs.labels[rs.root_index(p.roots.back())].find('~') != std::string::npos));
}

TEST_CASE("FFLV polytope of A2 at the first fundamental weight") {
    RootSystem rs(CartanType{'A', 2});
    auto h = fflv_polytope(rs, {1, 0});
    auto pts = lattice_points(h);
    // canonical order a11, a12, a22
    LatticeSet expect = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK(pts == expect);
    CHECK(lattice_count(h) == pts.size());
}

TEST_CASE("FFLV lattice counts match Weyl dimensions") {
    for (auto t : std::vector<CartanType>{
             {'A', 2}, {'A', 3}, {'A', 4}, {'C', 2}, {'C', 3}}) {
        RootSystem rs(t);
        std::vector<Weight> lams;
        Weight lam(rs.n, 0);
        while (true) {
            lams.push_back(lam);
            int k = rs.n - 1;
            while (k >= 0 && lam[k] == 3) lam[k--] = 0;
            if (k < 0) break;
            ++lam[k];
        }
        for (auto& l : lams) {
            auto h = fflv_polytope(rs, l);
            CHECK(Int(lattice_count(h)) == rs.weyl_dim(l));
        }
    }
}

TEST_CASE("FFLV lattice sets are Minkowski additive") {
    auto check = [](CartanType t, Weight l1, Weight l2) {
        RootSystem rs(t);
        Weight sum(l1.size());
        for (size_t k = 0; k < l1.size(); ++k) sum[k] = l1[k] + l2[k];
        auto s1 = lattice_points(fflv_polytope(rs, l1));
        auto s2 = lattice_points(fflv_polytope(rs, l2));
        auto ss = lattice_points(fflv_polytope(rs, sum));
        CHECK(minkowski_sum(s1, s2) == ss);
    };
    check({'A', 2}, {1, 0}, {0, 1});
    check({'A', 2}, {2, 1}, {1, 2});
    check({'A', 3}, {1, 0, 0}, {0, 1, 1});
    check({'A', 3}, {1, 1, 0}, {1, 0, 1});
    check({'C', 2}, {1, 0}, {0, 1});
    check({'C', 2}, {1, 1}, {2, 1});
    check({'C', 3}, {1, 0, 0}, {0, 1, 1});
    check({'C', 3}, {0, 0, 1}, {1, 1, 0});
}

TEST_CASE("lattice point enumeration basics") {
    auto pts = lattice_points(p_ab_polytope(2, 2));
    LatticeSet expect = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    CHECK(pts == expect);

    CHECK(lattice_count(sp4_polytope(1, 1)) == 16);
    CHECK(sp4_count(1, 1) == 16);
    CHECK(sp4_count(0, 0) == 1);

    // {0} + X = X
    LatticeSet zero = {{0, 0}};
    CHECK(minkowski_sum(zero, expect) == expect);
    CHECK_THROWS(minkowski_sum(expect, LatticeSet{{0, 0, 0}}));
}

TEST_CASE("closed-form counts agree with enumeration") {
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= 12; ++b)
            CHECK(count_N(a, b) == (long)lattice_count(p_ab_polytope(a, b)));
    for (long m1 = 0; m1 <= 4; ++m1)
        for (long m2 = 0; m2 <= 4; ++m2)
            CHECK(sp4_count(m1, m2) == Int(lattice_count(sp4_polytope(m1, m2))));
}

TEST_CASE("malformed halfspace systems are rejected") {
    HalfspaceSystem neg_rhs;
    neg_rhs.dim = 1;
    neg_rhs.add_row({Rat(1)}, Rat(-1));
    CHECK_THROWS(lattice_points(neg_rhs));

    HalfspaceSystem neg_coeff;
    neg_coeff.dim = 1;
    neg_coeff.add_row({Rat(-1)}, Rat(2));
    CHECK_THROWS(lattice_points(neg_coeff));

    HalfspaceSystem unbounded;
    unbounded.dim = 2;
    unbounded.add_row({Rat(1), Rat(0)}, Rat(3));
    CHECK_THROWS(lattice_points(unbounded));
}

TEST_CASE("convex hull lattice points") {
    LatticeSet seg = {{0}, {2}};
    CHECK(hull_lattice_points(seg) == LatticeSet{{0}, {1}, {2}});

    LatticeSet simplex = {{0, 0}, {1, 0}, {0, 1}};
    CHECK(hull_lattice_points(simplex) == simplex);

    // FFLV fundamental lattice sets are saturated at small rank
    for (auto t : std::vector<CartanType>{{'A', 2}, {'A', 3}, {'C', 2}, {'C', 3}}) {
        RootSystem rs(t);
        for (int i = 0; i < rs.n; ++i) {
            Weight lam(rs.n, 0);
            lam[i] = 1;
            auto s = lattice_points(fflv_polytope(rs, lam));
            CHECK(hull_lattice_points(s) == s);
        }
    }
}

TEST_CASE("G2 box experiment at the fundamental weights") {
    CHECK(lattice_count(g2_box_w1(1)) == 7);
    CHECK(lattice_count(g2_box_w2(1)) == 12);

    auto r1 = g2_conjecture_experiment(1, 0);
    CHECK(r1.dim == 7);
    CHECK(r1.count_setsum == 7);
    CHECK(r1.count_hull >= r1.count_setsum);

    auto r2 = g2_conjecture_experiment(0, 1);
    CHECK(r2.dim == 14);
    CHECK(r2.count_setsum == 14);
    CHECK(r2.count_hull >= r2.count_setsum);
}
