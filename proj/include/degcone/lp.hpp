#pragma once
#include "rational.hpp"
#include <stdexcept>
#include <vector>

namespace degcone {

// Phase-1 simplex with Bland's rule: feasibility of {A t = b, t >= 0},
// exact rational arithmetic.
inline bool lp_equality_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    long m = (long)A.size();
    if (m == 0) return true;
    long nvar = (long)A[0].size();
    for (long i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& c : A[i]) c = -c;
            b[i] = -b[i];
        }
    // tableau: columns = structural vars, artificial vars, rhs
    long ncols = nvar + m;
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(ncols + 1, Rat(0)));
    std::vector<long> basis(m);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < nvar; ++j) T[i][j] = A[i][j];
        T[i][nvar + i] = 1;
        T[i][ncols] = b[i];
        basis[i] = nvar + i;
    }
    while (true) {
        // reduced costs for minimizing the sum of basic artificials
        long enter = -1;
        for (long j = 0; j < nvar && enter < 0; ++j) {
            Rat obj(0);
            for (long i = 0; i < m; ++i)
                if (basis[i] >= nvar) obj += T[i][j];
            if (obj > 0) enter = j;  // Bland: first improving column
        }
        if (enter < 0) break;
        long leave = -1;
        Rat best(0);
        for (long i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][ncols] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-1 objective unbounded");
        // pivot
        Rat piv = T[leave][enter];
        for (auto& c : T[leave]) c /= piv;
        for (long i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (long j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    Rat infeas(0);
    for (long i = 0; i < m; ++i)
        if (basis[i] >= nvar) infeas += T[i][ncols];
    return infeas == 0;
}

// Membership of x in the convex hull of the given points.
inline bool in_convex_hull(const std::vector<std::vector<long>>& points,
                           const std::vector<long>& x) {
    if (points.empty()) return false;
    long dim = (long)x.size();
    long m = (long)points.size();
    // sum t_i p_i = x, sum t_i = 1, t >= 0
    std::vector<std::vector<Rat>> A(dim + 1, std::vector<Rat>(m));
    std::vector<Rat> b(dim + 1);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < m; ++c) A[r][c] = Rat(points[c][r]);
        b[r] = Rat(x[r]);
    }
    for (long c = 0; c < m; ++c) A[dim][c] = 1;
    b[dim] = 1;
    return lp_equality_feasible(std::move(A), std::move(b));
}

}  // namespace degcone
