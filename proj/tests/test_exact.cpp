#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degcone/laurent.hpp"
#include "degcone/linalg.hpp"

#include <algorithm>
#include <functional>
#include <vector>

using namespace degcone;

TEST_CASE("quantum integers") {
    CHECK(qint(0, 1).is_zero());
    CHECK(qint(1, 3) == Laurent(Rat(1)));
    // [2]_q = q + q^{-1}
    Laurent two = Laurent::q_power(1) + Laurent::q_power(-1);
    CHECK(qint(2, 1) == two);
    // [3]_q = q^2 + 1 + q^{-2}
    Laurent three = Laurent::q_power(2) + Laurent(Rat(1)) + Laurent::q_power(-2);
    CHECK(qint(3, 1) == three);
    // [2]_{q^2} = q^2 + q^{-2}
    CHECK(qint(2, 2) == Laurent::q_power(2) + Laurent::q_power(-2));
    // [3]! = [3][2]
    CHECK(qfactorial(3, 1) == qint(3, 1) * qint(2, 1));
    CHECK_THROWS(qint(-1, 1));
}

TEST_CASE("Laurent evaluation is a ring homomorphism") {
    Laurent a = Laurent::q_power(3) - Laurent::monomial(-2, rat(3, 7)) + Laurent(Rat(5));
    Laurent b = qfactorial(4, 2) + Laurent::monomial(-5, rat(-2, 3));
    Rat q0 = rat(5, 3);
    CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
    CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
    CHECK((a - b).eval(q0) == a.eval(q0) - b.eval(q0));
}

TEST_CASE("QFun field arithmetic") {
    QFun q = QFun::q_power(1);
    QFun qi = QFun::q_power(-1);
    // (q - q^{-1}) / (q^2 - q^{-2}) = 1/(q + q^{-1})
    QFun lhs = (q - qi) / (q * q - qi * qi);
    QFun rhs = QFun(Rat(1)) / (q + qi);
    CHECK(lhs == rhs);
    CHECK(lhs.eval(rat(3, 2)) == Rat(1) / (rat(3, 2) + rat(2, 3)));
    // [4]_q / [2]_q = q^2 + q^{-2} is a Laurent polynomial again
    QFun r = QFun::from_laurent(qint(4, 1)) / QFun::from_laurent(qint(2, 1));
    CHECK(r.is_laurent());
    CHECK(r == QFun::from_laurent(qint(2, 2)));
    CHECK_THROWS(QFun(Rat(1)) / QFun());
    // pole detection
    QFun pole = QFun(Rat(1)) / (q - qi);
    CHECK_THROWS(pole.eval(Rat(1)));
}

TEST_CASE("dense rref") {
    auto id = rref<Rat>({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(id.rank == 2);
    auto dep = rref<Rat>({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(3), Rat(6)}});
    CHECK(dep.rank == 1);
    auto mix = rref<Rat>({{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(2)}});
    CHECK(mix.rank == 2);
    CHECK(mix.pivots == std::vector<long>{0, 1});
}

// rank oracle: determinant-based rank via minor expansion, n <= 5
static Rat det_minor(const std::vector<std::vector<Rat>>& m) {
    long n = (long)m.size();
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (long j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rat>> sub;
        for (long r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (long c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(row);
        }
        Rat t = m[0][j] * det_minor(sub);
        acc += (j % 2 ? -t : t);
    }
    return acc;
}

static long rank_oracle(const std::vector<std::vector<Rat>>& m) {
    long nr = (long)m.size(), nc = (long)m[0].size();
    for (long r = std::min(nr, nc); r >= 1; --r) {
        // any r x r minor nonzero?
        std::vector<long> rowsel(r), colsel(r);
        std::function<bool(long, long)> pickc = [&](long ci, long start) -> bool {
            if (ci == r) {
                std::vector<std::vector<Rat>> sub(r, std::vector<Rat>(r));
                for (long a = 0; a < r; ++a)
                    for (long b = 0; b < r; ++b) sub[a][b] = m[rowsel[a]][colsel[b]];
                return det_minor(sub) != 0;
            }
            for (long c = start; c < nc; ++c) {
                colsel[ci] = c;
                if (pickc(ci + 1, c + 1)) return true;
            }
            return false;
        };
        std::function<bool(long, long)> pickr = [&](long ri, long start) -> bool {
            if (ri == r) return pickc(0, 0);
            for (long rr = start; rr < nr; ++rr) {
                rowsel[ri] = rr;
                if (pickr(ri + 1, rr + 1)) return true;
            }
            return false;
        };
        if (pickr(0, 0)) return r;
    }
    return 0;
}

TEST_CASE("rref and RowSpace agree with the minor-expansion rank oracle") {
    // deterministic pseudo-random small matrices
    unsigned long state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (long)((state >> 33) % 7) - 3;
    };
    for (int trial = 0; trial < 40; ++trial) {
        long nr = 2 + (trial % 4), nc = 2 + ((trial / 4) % 4);
        std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc));
        for (auto& row : m)
            for (auto& x : row) x = Rat(next());
        long expect = rank_oracle(m);
        CHECK(rref(m).rank == expect);
        RowSpace<Rat> sp;
        for (auto& row : m) {
            SparseVec<Rat> v;
            for (long c = 0; c < nc; ++c)
                if (row[c] != 0) v[c] = row[c];
            sp.insert(v);
        }
        CHECK(sp.rank() == expect);
    }
}

TEST_CASE("RowSpace membership and provenance") {
    RowSpace<Rat> sp(true);
    SparseVec<Rat> a{{0, Rat(1)}, {1, Rat(2)}};
    SparseVec<Rat> b{{1, Rat(1)}, {2, Rat(1)}};
    sp.insert(a);
    sp.insert(b);
    // a + 3b
    SparseVec<Rat> t{{0, Rat(1)}, {1, Rat(5)}, {2, Rat(3)}};
    std::vector<Rat> combo;
    CHECK(sp.reduce(t, &combo).empty());
    CHECK(combo == std::vector<Rat>{Rat(1), Rat(3)});
    SparseVec<Rat> out{{0, Rat(1)}, {2, Rat(1)}};
    CHECK(!sp.contains(out));

    auto sol = solve_combination<Rat>({a, b}, t);
    REQUIRE(sol.has_value());
    CHECK(*sol == std::vector<Rat>{Rat(1), Rat(3)});
    CHECK(!solve_combination<Rat>({a, b}, out).has_value());
}
