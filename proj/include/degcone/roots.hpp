#pragma once
#include "rational.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace degcone {

struct CartanType {
    char family;  // 'A','B','C','D','G'
    int rank;

    static CartanType parse(char family, int rank) {
        CartanType t{family, rank};
        t.validate();
        return t;
    }
    void validate() const {
        bool ok = false;
        switch (family) {
            case 'A': ok = rank >= 1; break;
            case 'B': case 'C': ok = rank >= 2; break;
            case 'D': ok = rank >= 4; break;
            case 'G': ok = rank == 2; break;
            default: ok = false;
        }
        if (!ok)
            throw std::invalid_argument(std::string("inadmissible Cartan type ") + family +
                                        std::to_string(rank) +
                                        " (A_n n>=1, B_n/C_n n>=2, D_n n>=4, G_2 only)");
    }
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

using RootVec = std::vector<int>;   // coordinates in the simple-root basis
using Weight = std::vector<long>;   // coordinates in the fundamental-weight basis

class RootSystem {
public:
    CartanType type;
    int n;                                   // rank
    std::vector<std::vector<int>> cartan;    // C[i][j] = 2(a_i,a_j)/(a_i,a_i)
    std::vector<int> d;                      // symmetrizers, short roots (a,a)=2
    std::vector<RootVec> positive_roots;     // canonical ordering
    std::vector<std::string> labels;         // per positive root

    explicit RootSystem(CartanType t) : type(t), n(t.rank) {
        t.validate();
        build_cartan();
        build_positive_roots();
        order_and_label();
        root_pos_.clear();
        for (long i = 0; i < (long)positive_roots.size(); ++i)
            root_pos_[positive_roots[i]] = i;
    }

    long num_positive_roots() const { return (long)positive_roots.size(); }

    bool is_positive_root(const RootVec& v) const { return root_pos_.count(v) > 0; }
    long root_index(const RootVec& v) const {
        auto it = root_pos_.find(v);
        if (it == root_pos_.end()) throw std::invalid_argument("not a positive root");
        return it->second;
    }

    // (a,b) for vectors in the simple-root basis; (a_i,a_j) = d_i c_ij.
    long bilinear(const RootVec& a, const RootVec& b) const {
        long s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += (long)a[i] * b[j] * d[i] * cartan[i][j];
        return s;
    }

    // s_i(v) = v - <v, a_i^vee> a_i with <v, a_i^vee> = sum_j C[i][j] v_j.
    RootVec reflect(int i, const RootVec& v) const {
        long c = 0;
        for (int j = 0; j < n; ++j) c += (long)cartan[i][j] * v[j];
        RootVec r = v;
        r[i] -= (int)c;
        return r;
    }

    int height(const RootVec& v) const { return std::accumulate(v.begin(), v.end(), 0); }

    RootVec two_rho() const {
        RootVec s(n, 0);
        for (auto& b : positive_roots)
            for (int i = 0; i < n; ++i) s[i] += b[i];
        return s;
    }

    // Weyl dimension formula, exact.
    Int weyl_dim(const Weight& lam) const {
        check_dominant(lam);
        Rat prod(1);
        for (auto& a : positive_roots) {
            long num = 0, den = 0;
            for (int i = 0; i < n; ++i) {
                num += (lam[i] + 1) * (long)d[i] * a[i];
                den += (long)d[i] * a[i];
            }
            prod *= Rat(num, den);
        }
        prod.canonicalize();
        if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integer result");
        return prod.get_num();
    }

    void check_dominant(const Weight& lam) const {
        if ((int)lam.size() != n) throw std::invalid_argument("weight has wrong length");
        for (long c : lam)
            if (c < 0) throw std::invalid_argument("weight is not dominant");
    }

    const std::string& label(long idx) const { return labels[idx]; }

private:
    std::map<RootVec, long> root_pos_;

    void build_cartan() {
        cartan.assign(n, std::vector<int>(n, 0));
        d.assign(n, 1);
        for (int i = 0; i < n; ++i) cartan[i][i] = 2;
        auto edge = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; };
        switch (type.family) {
            case 'A':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                cartan[n - 1][n - 2] = -2;  // a_n short
                for (int i = 0; i + 1 < n; ++i) d[i] = 2;
                d[n - 1] = 1;
                break;
            case 'C':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                cartan[n - 2][n - 1] = -2;  // a_n long
                d[n - 1] = 2;
                break;
            case 'D':
                for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
                edge(n - 3, n - 2);
                edge(n - 3, n - 1);
                break;
            case 'G':
                cartan[0][1] = -3;  // a_1 short, a_2 long
                cartan[1][0] = -1;
                d[0] = 1;
                d[1] = 3;
                break;
        }
    }

    void build_positive_roots() {
        // closure of the simple roots under simple reflections
        std::set<RootVec> all;
        for (int i = 0; i < n; ++i) {
            RootVec e(n, 0);
            e[i] = 1;
            all.insert(e);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<RootVec> cur(all.begin(), all.end());
            for (auto& v : cur)
                for (int i = 0; i < n; ++i)
                    if (all.insert(reflect(i, v)).second) changed = true;
        }
        positive_roots.clear();
        for (auto& v : all)
            if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }))
                positive_roots.push_back(v);
    }

    // D4 convex-order used throughout the examples: word 212324212324 (1-based
    // s2 s1 s2 s3 s2 s4 s2 s1 s2 s3 s2 s4).
    static const std::vector<RootVec>& d4_display_order() {
        static const std::vector<RootVec> order = {
            {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 0},
            {0, 1, 1, 0}, {1, 2, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1},
            {0, 0, 1, 0}, {0, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}};
        return order;
    }

    void order_and_label() {
        std::vector<RootVec> ordered;
        if (type.family == 'A') {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    RootVec v(n, 0);
                    for (int k = i; k <= j; ++k) v[k] = 1;
                    ordered.push_back(v);
                }
        } else if (type.family == 'C' && n == 2) {
            ordered = {span_root(0, 0), bar_root_c(0, 0), span_root(0, 1), span_root(1, 1)};
        } else if (type.family == 'C' && n == 3) {
            ordered = {span_root(0, 0), span_root(0, 1), bar_root_c(0, 0),
                       span_root(0, 2), bar_root_c(0, 1), span_root(1, 1),
                       bar_root_c(1, 1), span_root(1, 2), span_root(2, 2)};
        } else if (type.family == 'B' && n == 3) {
            ordered = {span_root(0, 0), span_root(0, 1), span_root(1, 1),
                       span_root(0, 2), bar_root_b(0, 1), bar_root_b(0, 2),
                       span_root(1, 2), bar_root_b(1, 2), span_root(2, 2)};
        } else if (type.family == 'D' && n == 4) {
            ordered = d4_display_order();
        } else if (type.family == 'G') {
            ordered = {{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}};
        } else {
            ordered = positive_roots;
            std::sort(ordered.begin(), ordered.end(), [&](const RootVec& a, const RootVec& b) {
                int ha = height(a), hb = height(b);
                if (ha != hb) return ha < hb;
                return a < b;
            });
        }
        if (ordered.size() != positive_roots.size())
            throw std::logic_error("canonical root order has wrong size");
        std::set<RootVec> check(positive_roots.begin(), positive_roots.end());
        for (auto& v : ordered)
            if (!check.count(v)) throw std::logic_error("canonical root order mismatch");
        positive_roots = ordered;
        labels.clear();
        for (auto& v : positive_roots) labels.push_back(make_label(v));
    }

    RootVec span_root(int i, int j) const {  // a_i + ... + a_j, 0-based
        RootVec v(n, 0);
        for (int k = i; k <= j; ++k) v[k] = 1;
        return v;
    }
    RootVec bar_root_b(int i, int j) const {  // B: a_i+..+a_n+a_n+..+a_j, i<j 0-based
        RootVec v(n, 0);
        for (int k = i; k < j; ++k) v[k] = 1;
        for (int k = j; k < n; ++k) v[k] = 2;
        return v;
    }
    RootVec bar_root_c(int i, int j) const {  // C: a_i+..+a_n+a_{n-1}+..+a_j, i<=j 0-based
        RootVec v(n, 0);
        for (int k = i; k < j; ++k) v[k] = 1;
        for (int k = j; k < n - 1; ++k) v[k] = 2;
        v[n - 1] = 1;
        return v;
    }

    std::string make_label(const RootVec& v) const {
        if (type.family == 'G' || (type.family == 'D' && n == 4)) {
            // digit-string labels: G2 as 1/2 multiset, D4 as coordinates
            if (type.family == 'G') {
                std::string s;
                for (int k = 0; k < v[0]; ++k) s += "1";
                for (int k = 0; k < v[1]; ++k) s += "2";
                return s;
            }
            std::string s;
            for (int i = 0; i < n; ++i) s += std::to_string(v[i]);
            return s;
        }
        if (type.family == 'A') {
            int i = 0;
            while (v[i] == 0) ++i;
            int j = n - 1;
            while (v[j] == 0) --j;
            return "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
        }
        if (type.family == 'B' || type.family == 'C') {
            bool has2 = std::any_of(v.begin(), v.end(), [](int x) { return x >= 2; });
            int i = 0;
            while (v[i] == 0) ++i;
            if (!has2) {
                int j = n - 1;
                while (v[j] == 0) --j;
                return "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            }
            // bar root: find j with first coefficient-2 position (B) / structure (C)
            for (int j = 0; j < n; ++j) {
                if (type.family == 'B' && i < j && v == bar_root_b(i, j))
                    return "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "~}";
                if (type.family == 'C' && i <= j && v == bar_root_c(i, j))
                    return "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "~}";
            }
        }
        std::string s = "(";
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    }
};

struct ReducedWord {
    std::vector<int> letters;  // 0-based simple reflection indices

    static ReducedWord parse(const std::string& digits) {
        ReducedWord w;
        for (char c : digits) {
            if (c < '1' || c > '9') throw std::invalid_argument("word must be a digit string");
            w.letters.push_back(c - '1');
        }
        return w;
    }
    std::string str() const {
        std::string s;
        for (int i : letters) s += std::to_string(i + 1);
        return s;
    }
};

struct ConvexOrder {
    ReducedWord word;
    std::vector<RootVec> betas;  // beta_t = s_{i_1}...s_{i_{t-1}}(a_{i_t})

    long position_of(const RootVec& v) const {
        for (long t = 0; t < (long)betas.size(); ++t)
            if (betas[t] == v) return t;
        throw std::invalid_argument("root not in convex order");
    }
};

inline bool all_nonneg(const RootVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

// Builds the convex order of a reduced word; rejects non-reduced words.
inline ConvexOrder convex_order(const RootSystem& rs, const ReducedWord& w) {
    long N = rs.num_positive_roots();
    if ((long)w.letters.size() != N)
        throw std::invalid_argument("word length must equal the number of positive roots");
    // track w(a_j) for each simple root j
    std::vector<RootVec> img(rs.n);
    for (int j = 0; j < rs.n; ++j) {
        img[j].assign(rs.n, 0);
        img[j][j] = 1;
    }
    ConvexOrder co;
    co.word = w;
    std::set<RootVec> seen;
    for (long t = 0; t < N; ++t) {
        int i = w.letters[t];
        if (i < 0 || i >= rs.n) throw std::invalid_argument("letter out of range");
        RootVec beta = img[i];
        if (!all_nonneg(beta) || !seen.insert(beta).second)
            throw std::invalid_argument("word is not reduced");
        co.betas.push_back(beta);
        // w <- w * s_i : w'(a_j) = w(a_j) - C[i][j] w(a_i)
        RootVec wi = img[i];
        for (int j = 0; j < rs.n; ++j)
            for (int k = 0; k < rs.n; ++k)
                img[j][k] -= rs.cartan[i][j] * wi[k];
    }
    return co;
}

// Enumerates reduced words of w0 by depth-first search; emits at most `limit`
// words when limit > 0.
inline void reduced_words_of_w0(const RootSystem& rs, const std::function<bool(const ReducedWord&)>& emit,
                                long limit = 0) {
    long N = rs.num_positive_roots();
    std::vector<RootVec> img(rs.n);
    for (int j = 0; j < rs.n; ++j) {
        img[j].assign(rs.n, 0);
        img[j][j] = 1;
    }
    ReducedWord cur;
    long count = 0;
    bool stop = false;
    std::function<void()> dfs = [&]() {
        if (stop) return;
        if ((long)cur.letters.size() == N) {
            ++count;
            if (!emit(cur)) stop = true;
            if (limit > 0 && count >= limit) stop = true;
            return;
        }
        for (int i = 0; i < rs.n && !stop; ++i) {
            if (!all_nonneg(img[i])) continue;  // length would not increase
            std::vector<RootVec> saved = img;
            RootVec wi = img[i];
            for (int j = 0; j < rs.n; ++j)
                for (int k = 0; k < rs.n; ++k)
                    img[j][k] -= rs.cartan[i][j] * wi[k];
            cur.letters.push_back(i);
            dfs();
            cur.letters.pop_back();
            img = saved;
        }
    };
    dfs();
}

inline std::vector<ReducedWord> all_reduced_words(const RootSystem& rs, long limit = 0) {
    std::vector<ReducedWord> out;
    reduced_words_of_w0(rs, [&](const ReducedWord& w) {
        out.push_back(w);
        return true;
    }, limit);
    return out;
}

// Checks the convex-order invariants: bijection with positive roots,
// sum = 2*rho, and convexity (a sum of two roots sits strictly between them).
inline void check_convex_order(const RootSystem& rs, const ConvexOrder& co) {
    long N = rs.num_positive_roots();
    std::set<RootVec> seen(co.betas.begin(), co.betas.end());
    if ((long)seen.size() != N) throw std::logic_error("convex order is not a bijection");
    RootVec sum(rs.n, 0);
    for (auto& b : co.betas)
        for (int i = 0; i < rs.n; ++i) sum[i] += b[i];
    if (sum != rs.two_rho()) throw std::logic_error("convex order does not sum to 2rho");
    for (long i = 0; i < N; ++i)
        for (long j = i + 1; j < N; ++j) {
            RootVec s(rs.n);
            for (int k = 0; k < rs.n; ++k) s[k] = co.betas[i][k] + co.betas[j][k];
            if (!rs.is_positive_root(s)) continue;
            long p = co.position_of(s);
            if (!(i < p && p < j)) throw std::logic_error("convexity violated");
        }
}

}  // namespace degcone
