#pragma once
#include "chevalley.hpp"
#include "cone.hpp"
#include "linalg.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace degcone {

// Column-major matrix: Mat[col] holds the image coordinates of basis vector col.
using Mat = std::vector<std::vector<Rat>>;

// Reduced word fixing the PBW ordering used when evaluating f-monomials.
inline std::string default_word_string(const RootSystem& rs) {
    const CartanType& t = rs.type;
    if (t.family == 'A') {
        std::string w;
        for (int k = 1; k <= t.rank; ++k)
            for (int j = k; j >= 1; --j) w += std::to_string(j);
        return w;
    }
    if (t.family == 'B' && t.rank == 3) return "121321323";
    if (t.family == 'C' && t.rank == 2) return "1212";
    if (t.family == 'C' && t.rank == 3) return "123212323";
    if (t.family == 'D' && t.rank == 4) return "212324212324";
    if (t.family == 'G') return "121212";
    auto ws = all_reduced_words(rs, 1);
    return ws.at(0).str();
}

inline ConvexOrder default_convex_order(const RootSystem& rs) {
    return convex_order(rs, ReducedWord::parse(default_word_string(rs)));
}

// Simple module V(lambda) as the Verma quotient by the radical of the
// contravariant form, built weight space by weight space.  Weight spaces are
// keyed by the content nu with mu = lambda - sum nu_i alpha_i.
class Irrep {
public:
    Irrep(const RootSystem& rs, Weight lam)
        : rs_(rs), lam_(std::move(lam)), chev_(rs) {
        rs_.check_dominant(lam_);
        build();
    }

    const RootSystem& root_system() const { return rs_; }
    const Weight& highest_weight() const { return lam_; }
    const std::map<RootVec, long>& weight_dims() const { return dims_; }
    long dim_at(const RootVec& nu) const {
        auto it = dims_.find(nu);
        return it == dims_.end() ? 0 : it->second;
    }
    Int dimension() const {
        Int t = 0;
        for (auto& [nu, d] : dims_) t += d;
        return t;
    }

    // image of v (coordinates at content nu) under f_{beta_g}, canonical index g
    std::vector<Rat> apply_f(long g, const RootVec& nu, const std::vector<Rat>& v) const {
        const RootVec& beta = rs_.positive_roots[g];
        RootVec tgt = add(nu, beta);
        if (dim_at(tgt) == 0 || is_zero(v)) return zero_at(tgt);
        if (rs_.height(beta) == 1) {
            int i = 0;
            while (beta[i] == 0) ++i;
            auto it = f_.find({i, nu});
            if (it == f_.end()) return zero_at(tgt);
            return mat_apply(it->second, v, dim_at(tgt));
        }
        auto [eps, eta] = chev_.extraspecial(g);
        long N = chev_.n_pos(eps, eta);
        // [f_eps, f_eta] = -N f_gamma
        RootVec via_e = add(nu, rs_.positive_roots[eps]);
        RootVec via_h = add(nu, rs_.positive_roots[eta]);
        std::vector<Rat> a = apply_f(eta, via_e, apply_f(eps, nu, v));
        std::vector<Rat> b = apply_f(eps, via_h, apply_f(eta, nu, v));
        std::vector<Rat> out = zero_at(tgt);
        for (long k = 0; k < (long)out.size(); ++k) {
            Rat num = (k < (long)a.size() ? a[k] : Rat(0)) - (k < (long)b.size() ? b[k] : Rat(0));
            out[k] = num / Rat(N);
        }
        return out;
    }

    std::vector<Rat> apply_e(int i, const RootVec& nu, const std::vector<Rat>& v) const {
        RootVec tgt = nu;
        tgt[i] -= 1;
        if (tgt[i] < 0 || dim_at(tgt) == 0) return {};
        auto it = e_.find({i, nu});
        if (it == e_.end()) return zero_at(tgt);
        return mat_apply(it->second, v, dim_at(tgt));
    }

    RootVec content_of(const std::vector<long>& s) const {
        RootVec nu(rs_.n, 0);
        for (long g = 0; g < (long)s.size(); ++g)
            for (int k = 0; k < rs_.n; ++k) nu[k] += s[g] * rs_.positive_roots[g][k];
        return nu;
    }

    // f^s v_lambda with s over canonical roots; factors taken in the convex
    // order of co, rightmost factor acting first.
    std::vector<Rat> monomial_vector(const std::vector<long>& s, const ConvexOrder& co) const {
        RootVec total = content_of(s);
        if (dim_at(total) == 0) return zero_at(total);
        RootVec cur(rs_.n, 0);
        std::vector<Rat> v = {Rat(1)};
        for (long t = (long)co.betas.size() - 1; t >= 0; --t) {
            long g = rs_.root_index(co.betas[t]);
            for (long rep = 0; rep < s[g]; ++rep) {
                v = apply_f(g, cur, v);
                cur = add(cur, rs_.positive_roots[g]);
                if (is_zero(v)) return zero_at(total);
            }
        }
        return v;
    }

    const ChevalleyBasis& chevalley() const { return chev_; }

private:
    static RootVec add(const RootVec& a, const RootVec& b) {
        RootVec r = a;
        for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
        return r;
    }
    static bool is_zero(const std::vector<Rat>& v) {
        for (auto& x : v)
            if (x != 0) return false;
        return true;
    }
    std::vector<Rat> zero_at(const RootVec& nu) const {
        return std::vector<Rat>(dim_at(nu), Rat(0));
    }
    static std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& v, long tgt_dim) {
        std::vector<Rat> out(tgt_dim, Rat(0));
        for (long c = 0; c < (long)m.size(); ++c) {
            if (v[c] == 0) continue;
            for (long r = 0; r < tgt_dim; ++r) out[r] += v[c] * m[c][r];
        }
        return out;
    }
    long pairing_h(int i, const RootVec& nu) const {  // (lam - nu)(h_i)
        long val = lam_[i];
        for (int k = 0; k < rs_.n; ++k) val -= (long)nu[k] * rs_.cartan[i][k];
        return val;
    }

    void build() {
        RootVec zero(rs_.n, 0);
        dims_[zero] = 1;
        gram_[zero] = {{Rat(1)}};
        std::vector<RootVec> level = {zero};
        while (!level.empty()) {
            std::set<RootVec> next;
            for (auto& nu : level)
                for (int i = 0; i < rs_.n; ++i) {
                    RootVec m = nu;
                    ++m[i];
                    next.insert(m);
                }
            std::vector<RootVec> grown;
            for (auto& nu : next)
                if (build_space(nu)) grown.push_back(nu);
            level = std::move(grown);
        }
        if (dimension() != rs_.weyl_dim(lam_))
            throw std::logic_error("irrep dimension mismatch");
    }

    // Returns true if the weight space at nu is nonzero.
    bool build_space(const RootVec& nu) {
        struct Cand { int i; long u; };
        std::vector<Cand> cands;
        for (int i = 0; i < rs_.n; ++i) {
            if (nu[i] == 0) continue;
            RootVec p = nu;
            --p[i];
            long dp = dim_at(p);
            for (long u = 0; u < dp; ++u) cands.push_back({i, u});
        }
        if (cands.empty()) return false;
        long m = (long)cands.size();
        Mat G(m, std::vector<Rat>(m, Rat(0)));
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b) G[a][b] = cand_pairing(nu, cands[a].i, cands[a].u, cands[b].i, cands[b].u);
        // choose candidates whose Gram rows are independent; express the rest
        RowSpace<Rat> sp;
        std::vector<long> chosen;
        std::vector<std::map<long, Rat>> expr(m);
        for (long k = 0; k < m; ++k) {
            SparseVec<Rat> row;
            for (long c = 0; c < m; ++c)
                if (G[k][c] != 0) row[c] = G[k][c];
            if (solve_against(sp, chosen, G, k, expr)) continue;
            sp.insert(row);
            expr[k][(long)chosen.size()] = Rat(1);
            chosen.push_back(k);
        }
        long dim = (long)chosen.size();
        if (dim == 0) return false;
        dims_[nu] = dim;
        Mat& g = gram_[nu];
        g.assign(dim, std::vector<Rat>(dim, Rat(0)));
        for (long a = 0; a < dim; ++a)
            for (long b = 0; b < dim; ++b) g[a][b] = G[chosen[a]][chosen[b]];
        // f_i matrices parent -> nu
        std::map<int, Mat> fm;
        for (long k = 0; k < m; ++k) {
            Mat& mat = fm[cands[k].i];
            std::vector<Rat> col(dim, Rat(0));
            for (auto& [slot, val] : expr[k]) col[slot] = val;
            mat.push_back(std::move(col));
        }
        for (auto& [i, mat] : fm) {
            RootVec p = nu;
            --p[i];
            f_[{i, p}] = std::move(mat);
        }
        // e_i matrices nu -> nu - e_i
        for (int i = 0; i < rs_.n; ++i) {
            RootVec tc = nu;
            --tc[i];
            if (tc[i] < 0 || dim_at(tc) == 0) continue;
            Mat mat;
            for (long t = 0; t < dim; ++t) {
                const Cand& c = cands[chosen[t]];
                mat.push_back(e_of_candidate(nu, i, c.i, c.u));
            }
            e_[{i, nu}] = std::move(mat);
        }
        return true;
    }

    // e_i applied to the candidate f_j b_u (parent content nu - e_j), expressed
    // in the basis at nu - e_i.
    std::vector<Rat> e_of_candidate(const RootVec& nu, int i, int j, long u) const {
        RootVec tc = nu;
        --tc[i];
        std::vector<Rat> col(dim_at(tc), Rat(0));
        RootVec pj = nu;
        --pj[j];
        RootVec q = pj;
        --q[i];
        if (q[i] >= 0 && dim_at(q) > 0) {
            auto eit = e_.find({i, pj});
            if (eit != e_.end()) {
                const std::vector<Rat>& w = eit->second[u];
                auto fit = f_.find({j, q});
                if (fit != f_.end()) {
                    auto img = mat_apply(fit->second, w, dim_at(tc));
                    for (long r = 0; r < (long)col.size(); ++r) col[r] += img[r];
                }
            }
        }
        if (i == j) col[u] += Rat(pairing_h(i, pj));
        return col;
    }

    // <f_i b_u, f_j b_{u'}> from level data below nu
    Rat cand_pairing(const RootVec& nu, int i, long u, int j, long up) const {
        RootVec pi = nu, pj = nu;
        --pi[i];
        --pj[j];
        Rat val(0);
        // <b_u, f_j e_i b_{u'}>
        RootVec q = pj;
        --q[i];
        if (q[i] >= 0 && dim_at(q) > 0) {
            auto eit = e_.find({i, pj});
            if (eit != e_.end()) {
                const std::vector<Rat>& w = eit->second[up];
                auto fit = f_.find({j, q});
                if (fit != f_.end()) {
                    auto img = mat_apply(fit->second, w, dim_at(pi));
                    const Mat& g = gram_.at(pi);
                    for (long r = 0; r < (long)img.size(); ++r) val += g[u][r] * img[r];
                }
            }
        }
        if (i == j) val += Rat(pairing_h(i, pj)) * gram_.at(pi)[u][up];
        return val;
    }

    static bool solve_against(const RowSpace<Rat>& sp, const std::vector<long>& chosen,
                              const Mat& G, long k, std::vector<std::map<long, Rat>>& expr) {
        SparseVec<Rat> row;
        long m = (long)G.size();
        for (long c = 0; c < m; ++c)
            if (G[k][c] != 0) row[c] = G[k][c];
        SparseVec<Rat> res = sp.reduce(row);
        if (!res.empty()) return false;
        // row_k = sum x_t row_{chosen_t}: solve the small system over the
        // chosen columns (the Gram restricted to chosen rows/cols is invertible)
        long d = (long)chosen.size();
        std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(d + 1, Rat(0)));
        for (long a = 0; a < d; ++a) {
            for (long b = 0; b < d; ++b) aug[a][b] = G[chosen[a]][chosen[b]];
            aug[a][d] = G[k][chosen[a]];
        }
        auto r = rref(aug);
        if (r.rank != d) throw std::logic_error("degenerate Gram restriction");
        for (long t = 0; t < d; ++t)
            if (r.mat[t][d] != 0) expr[k][t] = r.mat[t][d];
        return true;
    }

    const RootSystem& rs_;
    Weight lam_;
    ChevalleyBasis chev_;
    std::map<RootVec, long> dims_;
    std::map<std::pair<int, RootVec>, Mat> f_;  // (i, source content) -> matrix
    std::map<std::pair<int, RootVec>, Mat> e_;
    std::map<RootVec, Mat> gram_;
};

namespace repdetail {

inline void kostant_rec(const RootSystem& rs, long g, RootVec rem, std::vector<long>& s,
                        std::vector<std::vector<long>>& out) {
    long N = rs.num_positive_roots();
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
        std::vector<long> full = s;
        full.resize(N, 0);
        out.push_back(std::move(full));
        return;
    }
    if (g == N) return;
    const RootVec& beta = rs.positive_roots[g];
    long max_mult = -1;
    for (int k = 0; k < rs.n; ++k)
        if (beta[k] > 0) {
            long m = rem[k] / beta[k];
            if (max_mult < 0 || m < max_mult) max_mult = m;
        }
    for (long c = 0; c <= max_mult; ++c) {
        s.push_back(c);
        kostant_rec(rs, g + 1, rem, s, out);
        s.pop_back();
        for (int k = 0; k < rs.n; ++k) rem[k] -= beta[k];
        if (!all_nonneg(rem)) break;
    }
}

inline std::vector<std::vector<long>> kostant_exponents(const RootSystem& rs, const RootVec& nu) {
    std::vector<std::vector<long>> out;
    std::vector<long> s;
    kostant_rec(rs, 0, nu, s, out);
    return out;
}

}  // namespace repdetail

struct MonomialityReport {
    bool monomial = false;
    bool corollary_holds = false;  // sufficient conditions of the corollary
    bool lemma_holds = false;      // sufficient condition of the lemma
    LatticeSet survivors;          // S(lambda), exponents in canonical root order
    struct WeightLine {
        RootVec nu;
        long dim;
        long nsurv;
    };
    std::vector<WeightLine> weights;
};

inline MonomialityReport is_monomial_ideal(const RootSystem& rs, const Weight& lam,
                                           const DegreeFunction& d,
                                           const ConvexOrder* order = nullptr) {
    long N = rs.num_positive_roots();
    if ((long)d.size() != N) throw std::invalid_argument("degree dimension mismatch");
    for (long v : d)
        if (v <= 0) throw std::invalid_argument("degree values must be positive");
    if (!contains(classical_cone(rs), d))
        throw std::invalid_argument("degree not in the classical cone");
    ConvexOrder co = order ? *order : default_convex_order(rs);
    Irrep rep(rs, lam);

    MonomialityReport rep_out;
    rep_out.monomial = true;
    rep_out.corollary_holds = true;
    rep_out.lemma_holds = true;
    for (auto& [nu, r] : rep.weight_dims()) {
        auto exps = repdetail::kostant_exponents(rs, nu);
        struct Item {
            long deg;
            std::vector<long> s;
            std::vector<Rat> vec;
            bool zero;
        };
        std::vector<Item> items;
        for (auto& s : exps) {
            long deg = 0;
            for (long g = 0; g < N; ++g) deg += s[g] * d[g];
            auto vec = rep.monomial_vector(s, co);
            bool zero = std::all_of(vec.begin(), vec.end(), [](const Rat& x) { return x == 0; });
            items.push_back({deg, s, std::move(vec), zero});
        }
        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.deg != b.deg ? a.deg < b.deg : a.s < b.s;
        });
        // survivors: vectors outside the span of all strictly lower degrees
        RowSpace<Rat> lower;
        long nsurv = 0;
        for (size_t k = 0; k < items.size();) {
            size_t e = k;
            while (e < items.size() && items[e].deg == items[k].deg) ++e;
            for (size_t t = k; t < e; ++t) {
                if (items[t].zero) continue;
                SparseVec<Rat> v;
                for (long c = 0; c < (long)items[t].vec.size(); ++c)
                    if (items[t].vec[c] != 0) v[c] = items[t].vec[c];
                if (!lower.contains(v)) {
                    ++nsurv;
                    rep_out.survivors.insert(items[t].s);
                }
            }
            for (size_t t = k; t < e; ++t) {
                if (items[t].zero) continue;
                SparseVec<Rat> v;
                for (long c = 0; c < (long)items[t].vec.size(); ++c)
                    if (items[t].vec[c] != 0) v[c] = items[t].vec[c];
                lower.insert(std::move(v));
            }
            k = e;
        }
        if (nsurv != r) rep_out.monomial = false;
        rep_out.weights.push_back({nu, r, nsurv});

        // sufficient-condition bookkeeping on S_mu (nonzero monomials)
        std::vector<const Item*> smu;
        for (auto& it : items)
            if (!it.zero) smu.push_back(&it);
        if (r == 1) {
            if (smu.size() >= 2 && smu[0]->deg >= smu[1]->deg) rep_out.corollary_holds = false;
        } else {
            std::set<long> degs;
            for (auto* it : smu) degs.insert(it->deg);
            if ((long)degs.size() != (long)smu.size()) rep_out.corollary_holds = false;
        }
        RowSpace<Rat> acc;
        long max_t_deg = -1;
        for (auto* it : smu) {
            SparseVec<Rat> v;
            for (long c = 0; c < (long)it->vec.size(); ++c)
                if (it->vec[c] != 0) v[c] = it->vec[c];
            if (acc.insert(std::move(v)))
                max_t_deg = std::max(max_t_deg, it->deg);
            else if (it->deg <= max_t_deg)
                rep_out.lemma_holds = false;
        }
    }
    return rep_out;
}

// Type A local-monomiality criterion over quadruples a_{i,j}+a_{k,l} = a_{i,l}+a_{k,j}.
inline bool an_local_criterion(const RootSystem& rs, const DegreeFunction& d) {
    if (rs.type.family != 'A') throw std::invalid_argument("criterion is specific to type A");
    int n = rs.n;
    auto idx = [&](int i, int j) {  // 1-based span a_i..a_j
        RootVec v(n, 0);
        for (int k = i; k <= j; ++k) v[k - 1] = 1;
        return rs.root_index(v);
    };
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l)
                    if (d[idx(i, j)] + d[idx(k, l)] == d[idx(i, l)] + d[idx(k, j)]) return false;
    return true;
}

struct GlobalCheckResult {
    bool counts_match = false;
    Int minkowski_count = 0;
    Int dim = 0;
    std::optional<bool> direct;  // full monomiality when the module is small
};

// Minkowski promotion: #(S(w_1)^{+m_1} + ... + S(w_n)^{+m_n}) vs dim V(lambda).
inline GlobalCheckResult minkowski_global_check(const RootSystem& rs, const DegreeFunction& d,
                                                const Weight& lam, long direct_bound = 300) {
    GlobalCheckResult res;
    long N = rs.num_positive_roots();
    LatticeSet sum = {LatticePoint(N, 0)};
    for (int i = 0; i < rs.n; ++i) {
        if (lam[i] == 0) continue;
        Weight w(rs.n, 0);
        w[i] = 1;
        auto rep = is_monomial_ideal(rs, w, d);
        if (!rep.monomial)
            throw std::invalid_argument("degree is not locally monomial");
        for (long m = 0; m < lam[i]; ++m) sum = minkowski_sum(sum, rep.survivors);
    }
    res.minkowski_count = Int((unsigned long)sum.size());
    res.dim = rs.weyl_dim(lam);
    res.counts_match = (res.minkowski_count == res.dim);
    if (res.dim <= direct_bound) res.direct = is_monomial_ideal(rs, lam, d).monomial;
    return res;
}

enum class DegreeVariant { global, local };

// Reference degree functions, in canonical root order.
inline DegreeFunction canonical_degree(const RootSystem& rs, DegreeVariant variant) {
    long N = rs.num_positive_roots();
    char fam = rs.type.family;
    int n = rs.n;
    DegreeFunction d(N, 0);
    auto fail = [&]() -> DegreeFunction {
        throw std::invalid_argument("no printed degree for this type/variant");
    };
    if (fam == 'A') {
        for (long g = 0; g < N; ++g) {
            const RootVec& v = rs.positive_roots[g];
            int i = 0;
            while (v[i] == 0) ++i;
            int j = n - 1;
            while (v[j] == 0) --j;
            d[g] = variant == DegreeVariant::global
                       ? (long)(j - i + 1) * (n - 1 - j + 1)
                       : 1L << ((n - 1) - (j - i));
        }
        return d;
    }
    if (fam == 'C' && variant == DegreeVariant::global) {
        for (long g = 0; g < N; ++g) {
            const std::string& l = rs.labels[g];
            int i, j;
            if (std::sscanf(l.c_str(), "a_{%d,%d~}", &i, &j) == 2 && l.find('~') != std::string::npos)
                d[g] = (long)j * (2 * n - i - j + 1);
            else if (std::sscanf(l.c_str(), "a_{%d,%d}", &i, &j) == 2)
                d[g] = (long)(2 * n - j) * (j - i + 1);
            else
                fail();
        }
        return d;
    }
    if (fam == 'C' && n == 2 && variant == DegreeVariant::local)
        return {1, 1, 1, 2};  // order a11, a11~, a12, a22
    if (fam == 'B' && n == 3 && variant == DegreeVariant::global)
        return {4, 3, 3, 3, 1, 1, 4, 3, 2};  // a11,a12,a22,a13,a12~,a13~,a23,a23~,a33
    if (fam == 'D' && n == 4 && variant == DegreeVariant::global)
        return {5, 5, 1, 2, 4, 1, 1, 2, 6, 10, 12, 20};
    if (fam == 'G') {
        if (variant == DegreeVariant::global) return {2, 1, 3, 1, 3, 2};
        return {2, 2, 1, 2, 2, 5};  // order d1, d1112, d112, d11122, d12, d2
    }
    return fail();
}

}  // namespace degcone
