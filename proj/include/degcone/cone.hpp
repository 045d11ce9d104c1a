#pragma once
#include "rational.hpp"
#include "roots.hpp"
#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace degcone {

using DegreeFunction = std::vector<long>;  // values per positive root, canonical order

// Integer linear form <a, d> > 0, stored with content 1.
struct LinearForm {
    std::vector<long> a;

    void normalize() {
        Int g = 0;
        for (long c : a) g = gcd(g, Int(c < 0 ? -c : c));
        if (g > 1)
            for (long& c : a) c /= g.get_si();
    }
    bool operator==(const LinearForm& o) const { return a == o.a; }
    bool operator<(const LinearForm& o) const { return a < o.a; }
};

struct StrictCone {
    std::vector<std::string> ambient;  // coordinate labels (root labels)
    std::vector<LinearForm> forms;     // each <a,d> > 0; plus implicit d >= 0

    long dim() const { return (long)ambient.size(); }

    void add_form(LinearForm f) {
        bool zero = std::all_of(f.a.begin(), f.a.end(), [](long c) { return c == 0; });
        if (zero) throw std::invalid_argument("zero linear form");
        f.normalize();
        forms.push_back(std::move(f));
    }
    void dedupe_and_sort() {
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    }
};

// One strict inequality per pair of positive roots summing to a root.
inline StrictCone classical_cone(const RootSystem& rs) {
    StrictCone c;
    c.ambient = rs.labels;
    long N = rs.num_positive_roots();
    for (long i = 0; i < N; ++i)
        for (long j = i + 1; j < N; ++j) {
            RootVec s(rs.n);
            for (int k = 0; k < rs.n; ++k) s[k] = rs.positive_roots[i][k] + rs.positive_roots[j][k];
            if (!rs.is_positive_root(s)) continue;
            LinearForm f;
            f.a.assign(N, 0);
            f.a[i] += 1;
            f.a[j] += 1;
            f.a[rs.root_index(s)] -= 1;
            c.add_form(std::move(f));
        }
    c.dedupe_and_sort();
    return c;
}

inline bool contains(const StrictCone& c, const DegreeFunction& d) {
    if ((long)d.size() != c.dim()) throw std::invalid_argument("dimension mismatch");
    for (long v : d)
        if (v < 0) return false;
    for (auto& f : c.forms) {
        long s = 0;
        for (long k = 0; k < c.dim(); ++k) s += f.a[k] * d[k];
        if (s <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility on homogeneous systems of rows <a,x> > 0 or
// >= 0 over x >= 0, with provenance over the strict input forms for Farkas
// certificates and stage snapshots for witness back-substitution.

struct FeasibilityResult {
    bool empty;
    // empty: nonnegative combination of the input strict forms that is
    // componentwise <= 0 with at least one positive coefficient
    std::vector<Rat> certificate;
    // nonempty: rational point with x >= 0 satisfying all rows
    std::vector<Rat> witness;
};

namespace detail {

struct FMRow {
    std::vector<Rat> a;
    bool strict;
    std::vector<Rat> prov;  // coefficients over the tracked strict forms

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
    }
};

inline void fm_normalize(FMRow& r) {
    Rat m(0);
    for (auto& c : r.a)
        if (c != 0) { m = abs(c); break; }
    if (m == 0) return;
    for (auto& c : r.a) c /= m;
    for (auto& c : r.prov) c /= m;
}

// Feasibility of the prepared row system (each row <a,x> > 0 or >= 0) plus
// the implicit x >= 0; nf is the provenance length carried by the rows.
inline FeasibilityResult fm_feasible(long dim, std::vector<FMRow> rows, long nf) {
    for (long k = 0; k < dim; ++k) {
        FMRow r;
        r.a.assign(dim, Rat(0));
        r.a[k] = 1;
        r.strict = false;
        r.prov.assign(nf, Rat(0));
        rows.push_back(std::move(r));
    }

    std::vector<std::vector<FMRow>> stages;  // stages[k]: rows in vars 0..k
    auto dedupe = [&](std::vector<FMRow>& rs) {
        std::map<std::vector<Rat>, long> seen;
        std::vector<FMRow> out;
        for (auto& r : rs) {
            fm_normalize(r);
            auto it = seen.find(r.a);
            if (it == seen.end()) {
                seen[r.a] = (long)out.size();
                out.push_back(std::move(r));
            } else if (r.strict && !out[it->second].strict) {
                out[it->second] = std::move(r);
            }
        }
        rs = std::move(out);
    };
    dedupe(rows);

    for (long k = dim - 1; k >= 0; --k) {
        stages.resize(dim);
        stages[k] = rows;
        std::vector<FMRow> next;
        std::vector<const FMRow*> pos, neg;
        for (auto& r : rows) {
            if (r.a[k] > 0) pos.push_back(&r);
            else if (r.a[k] < 0) neg.push_back(&r);
            else next.push_back(r);
        }
        for (auto* p : pos)
            for (auto* m : neg) {
                // eliminate x_k: (-m.a[k]) * p + p.a[k] * m
                Rat cp = -m->a[k], cm = p->a[k];
                FMRow r;
                r.a.assign(dim, Rat(0));
                for (long c = 0; c < dim; ++c) r.a[c] = cp * p->a[c] + cm * m->a[c];
                r.a[k] = 0;
                r.strict = p->strict || m->strict;
                r.prov.assign(nf, Rat(0));
                for (long c = 0; c < nf; ++c) r.prov[c] = cp * p->prov[c] + cm * m->prov[c];
                if (r.is_zero() && !r.strict) continue;  // trivially satisfied
                next.push_back(std::move(r));
            }
        dedupe(next);
        // an all-zero strict row certifies emptiness
        for (auto& r : next)
            if (r.strict && r.is_zero()) {
                FeasibilityResult res;
                res.empty = true;
                res.certificate = r.prov;
                return res;
            }
        rows = std::move(next);
    }
    // feasible: back-substitute a witness
    FeasibilityResult res;
    res.empty = false;
    res.witness.assign(dim, Rat(0));
    for (long k = 0; k < dim; ++k) {
        bool has_upper = false;
        Rat lower(0), upper(0);
        bool lower_strict = false, upper_strict = false;
        for (auto& r : stages[k]) {
            if (r.a[k] == 0) continue;
            Rat rest(0);
            for (long c = 0; c < k; ++c) rest += r.a[c] * res.witness[c];
            Rat bound = -rest / r.a[k];
            if (r.a[k] > 0) {
                if (bound > lower || (bound == lower && r.strict)) {
                    lower = bound;
                    lower_strict = r.strict;
                } else if (bound == lower) {
                    lower_strict = lower_strict || r.strict;
                }
            } else {
                if (!has_upper || bound < upper) {
                    has_upper = true;
                    upper = bound;
                    upper_strict = r.strict;
                } else if (bound == upper) {
                    upper_strict = upper_strict || r.strict;
                }
            }
        }
        if (lower < 0) lower = 0;  // x >= 0 rows guarantee this anyway
        Rat x;
        if (!has_upper) {
            x = lower + 1;
        } else if (lower == upper) {
            x = lower;  // must be attainable: both bounds nonstrict
        } else {
            x = (lower + upper) / 2;
        }
        res.witness[k] = x;
    }
    return res;
}

}  // namespace detail

inline FeasibilityResult is_empty(const StrictCone& c) {
    long nf = (long)c.forms.size();
    std::vector<detail::FMRow> rows;
    for (long i = 0; i < nf; ++i) {
        detail::FMRow r;
        r.a.assign(c.forms[i].a.begin(), c.forms[i].a.end());
        r.strict = true;
        r.prov.assign(nf, Rat(0));
        r.prov[i] = 1;
        rows.push_back(std::move(r));
    }
    auto res = detail::fm_feasible(c.dim(), std::move(rows), nf);
    if (res.empty) {
        // re-verify the certificate by direct arithmetic
        std::vector<Rat> sum(c.dim(), Rat(0));
        bool some_pos = false;
        for (long i = 0; i < (long)c.forms.size(); ++i) {
            if (res.certificate[i] < 0) throw std::logic_error("negative certificate entry");
            if (res.certificate[i] > 0) some_pos = true;
            for (long k = 0; k < c.dim(); ++k) sum[k] += res.certificate[i] * c.forms[i].a[k];
        }
        for (auto& s : sum)
            if (s > 0) throw std::logic_error("certificate does not verify");
        if (!some_pos) throw std::logic_error("certificate is trivial");
    } else {
        // re-verify the witness
        for (auto& w : res.witness)
            if (w < 0) throw std::logic_error("witness has a negative coordinate");
        for (auto& f : c.forms) {
            Rat s(0);
            for (long k = 0; k < c.dim(); ++k) s += Rat(f.a[k]) * res.witness[k];
            if (s <= 0) throw std::logic_error("witness does not verify");
        }
    }
    return res;
}

inline FeasibilityResult is_empty_joint(const StrictCone& a, const StrictCone& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    StrictCone j = a;
    for (auto& f : b.forms) j.forms.push_back(f);
    j.dedupe_and_sort();
    return is_empty(j);
}

// True iff <f,x> > 0 holds on all of the (assumed nonempty) open cone c.
// For a nonzero linear form this is equivalent to f >= 0 on the closure
// {<a,x> >= 0 for all forms, x >= 0}, i.e. to the emptiness of that closed
// system together with -f > 0.
inline bool implies_form(const StrictCone& c, const LinearForm& f) {
    std::vector<detail::FMRow> rows;
    for (auto& g : c.forms) {
        detail::FMRow r;
        r.a.assign(g.a.begin(), g.a.end());
        r.strict = false;
        rows.push_back(std::move(r));
    }
    detail::FMRow neg;
    neg.a.resize(f.a.size());
    for (long k = 0; k < (long)f.a.size(); ++k) neg.a[k] = Rat(-f.a[k]);
    neg.strict = true;
    rows.push_back(std::move(neg));
    return detail::fm_feasible(c.dim(), std::move(rows), 0).empty;
}

inline bool cone_subset(const StrictCone& inner, const StrictCone& outer) {
    for (auto& f : outer.forms)
        if (!implies_form(inner, f)) return false;
    return true;
}

inline bool cone_equal(const StrictCone& a, const StrictCone& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    // both must be nonempty and share an interior point for strictness to match
    auto ra = is_empty(a), rb = is_empty(b);
    if (ra.empty != rb.empty) return false;
    if (ra.empty) return true;
    return cone_subset(a, b) && cone_subset(b, a);
}

// ---------------------------------------------------------------------------
// Interior lattice point: the inductive procedure along a convex order.
// supports_of[j] lists, for each pair (i,j) with i<j, the exponent vectors of
// the straightening monomials (length-N vectors supported on i+1..j-1).

struct PairSupports {
    long i, j;
    std::vector<std::vector<long>> supports;
};

inline DegreeFunction interior_lattice_point(long N, const std::vector<PairSupports>& relations) {
    DegreeFunction d(N, 0);
    d[0] = 1;
    for (long k = 1; k < N; ++k) {
        long best = 0;
        for (auto& ps : relations) {
            if (ps.j != k) continue;
            for (auto& s : ps.supports) {
                long deg = 0;
                for (long t = 0; t < N; ++t) deg += s[t] * d[t];
                best = std::max(best, deg);
            }
        }
        d[k] = best + 1;
    }
    return d;
}

// Reindexes a degree function given in convex-order positions into the
// canonical root ordering of rs.
inline DegreeFunction to_canonical_order(const RootSystem& rs, const ConvexOrder& co,
                                         const DegreeFunction& d_in_order) {
    DegreeFunction d(rs.num_positive_roots(), 0);
    for (long t = 0; t < (long)co.betas.size(); ++t)
        d[rs.root_index(co.betas[t])] = d_in_order[t];
    return d;
}

// ---------------------------------------------------------------------------
// All strictly positive lattice points minimizing the coordinate sum, by
// iterative deepening (degree functions take positive integer values).

struct MinimalPointsResult {
    bool bound_reached = false;
    long sum = -1;
    std::vector<DegreeFunction> points;
};

inline MinimalPointsResult minimal_lattice_points(const StrictCone& c, long max_sum = 64) {
    MinimalPointsResult out;
    long N = c.dim();
    long nf = (long)c.forms.size();
    // pre-compute suffix maxima of the coefficients of each form
    std::vector<std::vector<long>> sufmax(nf, std::vector<long>(N + 1));
    for (long f = 0; f < nf; ++f) {
        sufmax[f][N] = LONG_MIN / 2;
        for (long k = N - 1; k >= 0; --k)
            sufmax[f][k] = std::max(sufmax[f][k + 1], c.forms[f].a[k]);
    }
    DegreeFunction d(N, 0);
    std::vector<long> partial(nf, 0);
    std::function<void(long, long)> dfs = [&](long k, long rem) {
        // prune: every form must still be able to reach a positive value
        for (long f = 0; f < nf; ++f) {
            long bound = partial[f];
            if (k < N && rem > 0 && sufmax[f][k] > 0) bound += rem * sufmax[f][k];
            if (bound <= 0) return;
        }
        if (k == N) {
            if (rem != 0) return;
            out.points.push_back(d);
            return;
        }
        long spare = rem - (N - k);  // each remaining coordinate needs >= 1
        for (long v = 1; v <= 1 + spare; ++v) {
            d[k] = v;
            for (long f = 0; f < nf; ++f) partial[f] += v * c.forms[f].a[k];
            dfs(k + 1, rem - v);
            for (long f = 0; f < nf; ++f) partial[f] -= v * c.forms[f].a[k];
        }
        d[k] = 0;
    };
    for (long T = N; T <= max_sum; ++T) {
        out.points.clear();
        std::fill(partial.begin(), partial.end(), 0);
        dfs(0, T);
        if (!out.points.empty()) {
            out.sum = T;
            return out;
        }
    }
    out.bound_reached = true;
    return out;
}

}  // namespace degcone
