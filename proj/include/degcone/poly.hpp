#pragma once
#include "lp.hpp"
#include "roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace degcone {

using LatticePoint = std::vector<long>;
using LatticeSet = std::set<LatticePoint>;

// A Dyck path: a chain of positive roots from a diagonal root a_{i,i} to a
// diagonal root a_{j,j} (type A), or to a_{j,j} / a_{j,j~} (type C).
struct DyckPath {
    std::vector<RootVec> roots;
    int i = 0, j = 0;        // 1-based start/end rows
    bool bar_end = false;    // type C: path ends on the anti-diagonal
};

// Rational halfspace system {<a,x> <= b} together with the implicit x >= 0.
// All coefficient entries must be nonnegative and every coordinate needs a
// bounding row; this keeps prefix bounds exact during enumeration.
struct HalfspaceSystem {
    long dim = 0;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;

    void add_row(std::vector<Rat> row, Rat rhs) {
        if ((long)row.size() != dim) throw std::invalid_argument("row dimension mismatch");
        a.push_back(std::move(row));
        b.push_back(std::move(rhs));
    }

    void validate() const {
        for (long r = 0; r < (long)a.size(); ++r) {
            if (b[r] < 0) throw std::invalid_argument("infeasible row: nonnegative lhs, negative rhs");
            for (auto& c : a[r])
                if (c < 0) throw std::invalid_argument("negative coefficient unsupported");
        }
        for (long k = 0; k < dim; ++k) {
            bool bounded = false;
            for (auto& row : a)
                if (row[k] > 0) { bounded = true; break; }
            if (!bounded) throw std::invalid_argument("unbounded coordinate");
        }
    }
};

namespace detail {

// Type A grid walk: states (p,q), 1 <= p <= q <= n+1 rows of a_{p,q}; record
// the path whenever it sits on the diagonal, then keep extending.
inline void dyck_walk_a(const RootSystem& rs, int m, int p, int q,
                        std::vector<RootVec>& cur, int i, std::vector<DyckPath>& out) {
    RootVec v(rs.n, 0);
    for (int k = p; k <= q; ++k) v[k - 1] = 1;
    cur.push_back(v);
    if (p == q) out.push_back({cur, i, q, false});
    if (p + 1 <= q) dyck_walk_a(rs, m, p + 1, q, cur, i, out);
    if (q + 1 <= m) dyck_walk_a(rs, m, p, q + 1, cur, i, out);
    cur.pop_back();
}

// Type C walk over the alphabet 1 < ... < n < n-1~ < ... < 1~, encoded by the
// column code c in [r, 2n-r]: c <= n is the plain column c, c > n the barred
// column 2n-c.  Diagonal c == r ends at a_{r,r}; anti-diagonal c == 2n-r ends
// at a_{r,r~} and admits no further step.
inline RootVec c_root(const RootSystem& rs, int r, int c) {
    int n = rs.n;
    RootVec v(n, 0);
    if (c <= n) {
        for (int k = r; k <= c; ++k) v[k - 1] = 1;
    } else {
        int j = 2 * n - c;
        for (int k = r; k < j; ++k) v[k - 1] = 1;
        for (int k = j; k < n; ++k) v[k - 1] = 2;
        v[n - 1] = 1;
    }
    return v;
}

inline void dyck_walk_c(const RootSystem& rs, int r, int c,
                        std::vector<RootVec>& cur, int i, std::vector<DyckPath>& out) {
    int n = rs.n;
    cur.push_back(c_root(rs, r, c));
    if (c == r) out.push_back({cur, i, r, false});
    if (r < n && c == 2 * n - r) out.push_back({cur, i, r, true});
    if (c + 1 <= 2 * n - r) dyck_walk_c(rs, r, c + 1, cur, i, out);
    if (r + 1 <= c && c <= 2 * n - (r + 1)) dyck_walk_c(rs, r + 1, c, cur, i, out);
    cur.pop_back();
}

}  // namespace detail

inline std::vector<DyckPath> dyck_paths(const RootSystem& rs) {
    if (rs.type.family != 'A' && rs.type.family != 'C')
        throw std::invalid_argument("Dyck paths are defined for types A and C only");
    std::vector<DyckPath> out;
    std::vector<RootVec> cur;
    for (int i = 1; i <= rs.n; ++i) {
        if (rs.type.family == 'A')
            detail::dyck_walk_a(rs, rs.n, i, i, cur, i, out);
        else
            detail::dyck_walk_c(rs, i, i, cur, i, out);
    }
    return out;
}

// One inequality per Dyck path: sum of the coordinates along the path, bounded
// by lam_i + ... + lam_j (plain end) or lam_i + ... + lam_n (barred end).
inline HalfspaceSystem fflv_polytope(const RootSystem& rs, const Weight& lam) {
    rs.check_dominant(lam);
    HalfspaceSystem h;
    h.dim = rs.num_positive_roots();
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    for (auto& p : dyck_paths(rs)) {
        std::vector<Rat> row(h.dim, Rat(0));
        for (auto& v : p.roots) row[rs.root_index(v)] += 1;
        int hi = p.bar_end ? rs.n : p.j;
        long rhs = 0;
        for (int k = p.i; k <= hi; ++k) rhs += lam[k - 1];
        if (seen.insert({row, Rat(rhs)}).second) h.add_row(std::move(row), Rat(rhs));
    }
    h.validate();
    return h;
}

namespace detail {

// Rows scaled to integers so prefix bounds are exact long arithmetic.
struct IntSystem {
    long dim;
    std::vector<std::vector<long>> a;
    std::vector<long> b;
};

inline IntSystem scale_to_integers(const HalfspaceSystem& h) {
    IntSystem s;
    s.dim = h.dim;
    for (long r = 0; r < (long)h.a.size(); ++r) {
        Int l = h.b[r].get_den();
        for (auto& c : h.a[r]) {
            Int d = c.get_den();
            l = l * d / gcd(l, d);
        }
        std::vector<long> row(h.dim);
        for (long k = 0; k < h.dim; ++k) {
            Rat v = h.a[r][k] * Rat(l);
            row[k] = Int(v.get_num()).get_si();
        }
        Rat rb = h.b[r] * Rat(l);
        s.a.push_back(std::move(row));
        s.b.push_back(Int(rb.get_num()).get_si());
    }
    return s;
}

inline long prefix_bound(const IntSystem& s, long k, const std::vector<long>& slack) {
    long ub = -1;
    for (long r = 0; r < (long)s.a.size(); ++r) {
        if (s.a[r][k] <= 0) continue;
        long v = slack[r] / s.a[r][k];
        if (ub < 0 || v < ub) ub = v;
    }
    return ub;
}

inline void enumerate_rec(const IntSystem& s, long k, std::vector<long>& slack,
                          LatticePoint& x, LatticeSet& out) {
    if (k == s.dim) {
        out.insert(x);
        return;
    }
    long ub = prefix_bound(s, k, slack);
    for (long v = 0; v <= ub; ++v) {
        x[k] = v;
        if (v > 0)
            for (long r = 0; r < (long)s.a.size(); ++r) slack[r] -= s.a[r][k];
        enumerate_rec(s, k + 1, slack, x, out);
    }
    for (long r = 0; r < (long)s.a.size(); ++r) slack[r] += s.a[r][k] * ub;
    x[k] = 0;
}

inline unsigned long count_rec(const IntSystem& s, long k, std::vector<long>& slack) {
    long ub = prefix_bound(s, k, slack);
    if (k == s.dim - 1) return (unsigned long)(ub + 1);
    unsigned long total = 0;
    for (long v = 0; v <= ub; ++v) {
        if (v > 0)
            for (long r = 0; r < (long)s.a.size(); ++r) slack[r] -= s.a[r][k];
        total += count_rec(s, k + 1, slack);
    }
    for (long r = 0; r < (long)s.a.size(); ++r) slack[r] += s.a[r][k] * ub;
    return total;
}

}  // namespace detail

inline LatticeSet lattice_points(const HalfspaceSystem& h) {
    h.validate();
    auto s = detail::scale_to_integers(h);
    LatticeSet out;
    std::vector<long> slack = s.b;
    LatticePoint x(h.dim, 0);
    detail::enumerate_rec(s, 0, slack, x, out);
    return out;
}

inline unsigned long lattice_count(const HalfspaceSystem& h) {
    h.validate();
    if (h.dim == 0) return 1;
    auto s = detail::scale_to_integers(h);
    std::vector<long> slack = s.b;
    return detail::count_rec(s, 0, slack);
}

inline LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b) {
    if (a.empty() || b.empty()) return {};
    if (a.begin()->size() != b.begin()->size())
        throw std::invalid_argument("Minkowski sum: dimension mismatch");
    LatticeSet out;
    for (auto& p : a)
        for (auto& q : b) {
            LatticePoint s(p.size());
            for (long k = 0; k < (long)p.size(); ++k) s[k] = p[k] + q[k];
            out.insert(std::move(s));
        }
    return out;
}

// Closed-form count of lattice points of P(a,b) = {x,y >= 0, x+2y <= a, x+y <= b}.
inline long count_N(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("count_N: negative input");
    if (b >= a) {
        long l = (a + 1) / 2;
        return (a % 2) ? l * (l + 1) : (l + 1) * (l + 1);
    }
    if (a >= 2 * b) return (b + 1) * (b + 2) / 2;
    long l = a / 2;
    if (a % 2 == 0) return (-2 * l * l + 4 * l * b - b * b + b + 2 * l + 2) / 2;
    return (-2 * l * l + 4 * l * b - b * b + 3 * b + 2) / 2;
}

inline Int sp4_count(long m1, long m2) {
    Int p = Int(m1 + 1) * Int(m2 + 1) * Int(m1 + m2 + 2) * Int(m1 + 2 * m2 + 3);
    if (p % 6 != 0) throw std::logic_error("sp4_count: non-integer result");
    return p / 6;
}

inline HalfspaceSystem p_ab_polytope(long a, long b) {
    HalfspaceSystem h;
    h.dim = 2;
    h.add_row({Rat(1), Rat(2)}, Rat(a));
    h.add_row({Rat(1), Rat(1)}, Rat(b));
    h.validate();
    return h;
}

// SP4(m1,m2) in coordinates (x1,x2,x3,x4).
inline HalfspaceSystem sp4_polytope(long m1, long m2) {
    HalfspaceSystem h;
    h.dim = 4;
    h.add_row({Rat(1), Rat(0), Rat(0), Rat(0)}, Rat(m1));
    h.add_row({Rat(0), Rat(0), Rat(0), Rat(1)}, Rat(m2));
    h.add_row({Rat(2), Rat(1), Rat(2), Rat(2)}, Rat(2 * (m1 + m2)));
    h.add_row({Rat(1), Rat(1), Rat(1), Rat(2)}, Rat(m1 + 2 * m2));
    h.validate();
    return h;
}

// G2 boxes in coordinates (x1,...,x6) ordered as (a1, a1112, a112, a11122, a12, a2).
inline HalfspaceSystem g2_box_w1(long m1) {
    HalfspaceSystem h;
    h.dim = 6;
    h.add_row({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}, Rat(m1));
    h.add_row({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, Rat(0));
    h.add_row({Rat(2), Rat(2), Rat(1), Rat(2), Rat(2), Rat(0)}, Rat(2 * m1));
    h.validate();
    return h;
}

inline HalfspaceSystem g2_box_w2(long m2) {
    HalfspaceSystem h;
    h.dim = 6;
    h.add_row({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}, Rat(0));
    h.add_row({Rat(0), Rat(2), Rat(1), Rat(1), Rat(1), Rat(2)}, Rat(2 * m2));
    h.validate();
    return h;
}

// All integer points of conv(s): bounding-box candidates filtered by exact
// LP membership.
inline LatticeSet hull_lattice_points(const LatticeSet& s) {
    if (s.empty()) throw std::invalid_argument("hull of an empty set");
    long dim = (long)s.begin()->size();
    std::vector<std::vector<long>> pts(s.begin(), s.end());
    std::vector<long> lo(dim), hi(dim);
    for (long k = 0; k < dim; ++k) {
        lo[k] = hi[k] = pts[0][k];
        for (auto& p : pts) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    LatticeSet out;
    LatticePoint x = lo;
    while (true) {
        if (s.count(x) || in_convex_hull(pts, x)) out.insert(x);
        long k = dim - 1;
        while (k >= 0 && x[k] == hi[k]) x[k--] = lo[k];
        if (k < 0) break;
        ++x[k];
    }
    return out;
}

// The two readings of the 5.8 sum: m-fold set sums of the lattice points, and
// the lattice points of the convex hull of that sumset.  Reported, never asserted.
struct G2ExperimentRow {
    long m1, m2;
    Int dim;            // Weyl dimension of V(m1 w1 + m2 w2)
    long count_setsum;  // lattice points of the m-fold Minkowski set sum
    long count_hull;    // lattice points of the convex hull of the set sum
};

inline G2ExperimentRow g2_conjecture_experiment(long m1, long m2) {
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("negative multiple");
    RootSystem rs(CartanType{'G', 2});
    LatticeSet a = lattice_points(g2_box_w1(1));
    LatticeSet b = lattice_points(g2_box_w2(1));
    b.insert({0, 0, 3, 0, 0, 0});
    b.insert({0, 0, 0, 0, 3, 0});
    LatticeSet sum = {LatticePoint(6, 0)};
    for (long k = 0; k < m1; ++k) sum = minkowski_sum(sum, a);
    for (long k = 0; k < m2; ++k) sum = minkowski_sum(sum, b);
    G2ExperimentRow row;
    row.m1 = m1;
    row.m2 = m2;
    row.dim = rs.weyl_dim({m1, m2});
    row.count_setsum = (long)sum.size();
    row.count_hull = (long)hull_lattice_points(sum).size();
    return row;
}

}  // namespace degcone
