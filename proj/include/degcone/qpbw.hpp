#pragma once
#include "cone.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "roots.hpp"
#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace degcone {

// Canonical word in U_q(g): free F-word, then free E-word, then a K-monomial.
struct CanonWord {
    std::vector<int> fw, ew;
    std::vector<long> k;

    bool operator<(const CanonWord& o) const {
        return std::tie(fw, ew, k) < std::tie(o.fw, o.ew, o.k);
    }
    bool operator==(const CanonWord& o) const {
        return fw == o.fw && ew == o.ew && k == o.k;
    }
};

// weight of a word in the root lattice (F_i: -a_i, E_i: +a_i)
inline RootVec word_weight(int n, const CanonWord& w) {
    RootVec v(n, 0);
    for (int i : w.fw) v[i] -= 1;
    for (int i : w.ew) v[i] += 1;
    return v;
}

template <class Ctx>
class QEngine {
public:
    using S = typename Ctx::Scalar;
    using QElem = std::map<CanonWord, S>;

    const RootSystem& rs;
    Ctx ctx;

    QEngine(const RootSystem& r, Ctx c) : rs(r), ctx(std::move(c)) {}

    // (a_i, a_j) for simple roots, via the symmetrized Cartan matrix
    long sym(int i, int j) const { return (long)rs.d[i] * rs.cartan[i][j]; }
    // (mu, a_j) for mu = sum m_i a_i
    long pairing(const std::vector<long>& m, int j) const {
        long s = 0;
        for (int i = 0; i < rs.n; ++i) s += m[i] * sym(i, j);
        return s;
    }

    static void add_term(QElem& e, const CanonWord& w, const S& c) {
        if (Ctx::is_zero(c)) return;
        auto it = e.find(w);
        if (it == e.end()) e.emplace(w, c);
        else {
            it->second += c;
            if (Ctx::is_zero(it->second)) e.erase(it);
        }
    }

    QElem scalar(const S& c) const {
        QElem e;
        CanonWord w;
        w.k.assign(rs.n, 0);
        add_term(e, w, c);
        return e;
    }
    QElem gen_F(int i) const {
        QElem e;
        CanonWord w;
        w.fw = {i};
        w.k.assign(rs.n, 0);
        add_term(e, w, Ctx::one());
        return e;
    }
    QElem gen_E(int i) const {
        QElem e;
        CanonWord w;
        w.ew = {i};
        w.k.assign(rs.n, 0);
        add_term(e, w, Ctx::one());
        return e;
    }

    // ---- right multiplication by a single generator -----------------------

    QElem mult_right_K(const QElem& a, int i, long exp) const {
        QElem r;
        for (auto& [w, c] : a) {
            CanonWord nw = w;
            nw.k[i] += exp;
            add_term(r, nw, c);
        }
        return r;
    }

    QElem mult_right_E(const QElem& a, int j) const {
        QElem r;
        for (auto& [w, c] : a) {
            CanonWord nw = w;
            nw.ew.push_back(j);
            add_term(r, nw, c * ctx.q_pow(pairing(w.k, j)));
        }
        return r;
    }

    // E-word times F_j, straightened: terms have F-part in {[], [j]}.
    // E_i F_j = F_j E_i + delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}).
    QElem ef_word(const std::vector<int>& ew, int j) const {
        QElem out;
        if (ew.empty()) {
            CanonWord w;
            w.fw = {j};
            w.k.assign(rs.n, 0);
            add_term(out, w, Ctx::one());
            return out;
        }
        int i = ew.back();
        std::vector<int> head(ew.begin(), ew.end() - 1);
        // (head E_i) F_j = (head F_j) E_i + delta_ij head (K_i - K_i^{-1})/(..)
        QElem sub = ef_word(head, j);
        for (auto& [w, c] : sub) {
            CanonWord nw = w;
            nw.ew.push_back(i);
            add_term(out, nw, c * ctx.q_pow(pairing(w.k, i)));
        }
        if (i == j) {
            S inv = ctx.qdiff_inv(rs.d[i]);
            CanonWord wp, wm;
            wp.ew = head;
            wp.k.assign(rs.n, 0);
            wp.k[i] = 1;
            wm.ew = head;
            wm.k.assign(rs.n, 0);
            wm.k[i] = -1;
            add_term(out, wp, inv);
            add_term(out, wm, Ctx::zero() - inv);
        }
        return out;
    }

    QElem mult_right_F(const QElem& a, int j) const {
        QElem r;
        for (auto& [w, c] : a) {
            // (f e K^k) F_j = q^{-(mu_k,a_j)} f (e F_j) K^k
            S base = c * ctx.q_pow(-pairing(w.k, j));
            for (auto& [t, tc] : ef_word(w.ew, j)) {
                CanonWord nw;
                nw.fw = w.fw;
                nw.fw.insert(nw.fw.end(), t.fw.begin(), t.fw.end());
                nw.ew = t.ew;
                nw.k = w.k;
                for (int m = 0; m < rs.n; ++m) nw.k[m] += t.k[m];
                add_term(r, nw, base * tc);
            }
        }
        return r;
    }

    QElem multiply(const QElem& a, const QElem& b) const {
        QElem out;
        for (auto& [wb, cb] : b) {
            QElem cur;
            for (auto& [wa, ca] : a) add_term(cur, wa, ca * cb);
            for (int f : wb.fw) cur = mult_right_F(cur, f);
            for (int e : wb.ew) cur = mult_right_E(cur, e);
            for (int i = 0; i < rs.n; ++i)
                if (wb.k[i] != 0) cur = mult_right_K(cur, i, wb.k[i]);
            for (auto& [w, c] : cur) add_term(out, w, c);
        }
        return out;
    }

    QElem add(const QElem& a, const QElem& b) const {
        QElem r = a;
        for (auto& [w, c] : b) add_term(r, w, c);
        return r;
    }
    QElem scale(const QElem& a, const S& s) const {
        QElem r;
        for (auto& [w, c] : a) add_term(r, w, c * s);
        return r;
    }

    // ---- Lusztig automorphism T_i = T''_{i,1} -----------------------------

    QElem T_of_F(int i, int j) const {
        if (i == j) {
            // T_i(F_i) = -K_i^{-1} E_i = -q^{-2 d_i} E_i K_i^{-1}
            QElem e;
            CanonWord w;
            w.ew = {i};
            w.k.assign(rs.n, 0);
            w.k[i] = -1;
            add_term(e, w, Ctx::zero() - ctx.q_pow(-2 * (long)rs.d[i]));
            return e;
        }
        // T_i(F_j) = sum_{r+s=-c_ij} (-1)^r q_i^r F_i^{(r)} F_j F_i^{(s)}
        long m = -rs.cartan[i][j];
        QElem e;
        for (long r = 0; r <= m; ++r) {
            long s = m - r;
            CanonWord w;
            w.k.assign(rs.n, 0);
            for (long t = 0; t < r; ++t) w.fw.push_back(i);
            w.fw.push_back(j);
            for (long t = 0; t < s; ++t) w.fw.push_back(i);
            S coef = ctx.q_pow((long)rs.d[i] * r) / (ctx.qfact_s(r, rs.d[i]) * ctx.qfact_s(s, rs.d[i]));
            if (r % 2) coef = Ctx::zero() - coef;
            add_term(e, w, coef);
        }
        return e;
    }

    QElem T_of_E(int i, int j) const {
        if (i == j) {
            // T_i(E_i) = -F_i K_i
            QElem e;
            CanonWord w;
            w.fw = {i};
            w.k.assign(rs.n, 0);
            w.k[i] = 1;
            add_term(e, w, Ctx::zero() - Ctx::one());
            return e;
        }
        // T_i(E_j) = sum_{r+s=-c_ij} (-1)^r q_i^{-r} E_i^{(s)} E_j E_i^{(r)}
        long m = -rs.cartan[i][j];
        QElem e;
        for (long r = 0; r <= m; ++r) {
            long s = m - r;
            CanonWord w;
            w.k.assign(rs.n, 0);
            for (long t = 0; t < s; ++t) w.ew.push_back(i);
            w.ew.push_back(j);
            for (long t = 0; t < r; ++t) w.ew.push_back(i);
            S coef = ctx.q_pow(-(long)rs.d[i] * r) / (ctx.qfact_s(r, rs.d[i]) * ctx.qfact_s(s, rs.d[i]));
            if (r % 2) coef = Ctx::zero() - coef;
            add_term(e, w, coef);
        }
        return e;
    }

    QElem lusztig_T(int i, const QElem& x) const {
        QElem out;
        for (auto& [w, c] : x) {
            QElem cur = scalar(c);
            for (int f : w.fw) cur = multiply(cur, T_of_F(i, f));
            for (int e : w.ew) cur = multiply(cur, T_of_E(i, e));
            for (int j = 0; j < rs.n; ++j) {
                // T_i(K_j^m) = K_j^m K_i^{-m c_ij}
                long exp = w.k[j];
                if (exp == 0) continue;
                CanonWord kw;
                kw.k.assign(rs.n, 0);
                kw.k[j] = exp;
                kw.k[i] -= rs.cartan[i][j] * exp;
                QElem ke;
                add_term(ke, kw, Ctx::one());
                cur = multiply(cur, ke);
            }
            for (auto& [ww, cc] : cur) add_term(out, ww, cc);
        }
        return out;
    }

    // ---- PBW root vectors -------------------------------------------------

    // F_{beta_t} = T_{i_1}...T_{i_{t-1}}(F_{i_t}); verified to be a pure
    // F-element of weight -beta_t.
    std::vector<QElem> pbw_root_vectors(const ConvexOrder& co) const {
        std::vector<QElem> out;
        long N = (long)co.word.letters.size();
        for (long t = 0; t < N; ++t) {
            QElem x = gen_F(co.word.letters[t]);
            for (long s = t - 1; s >= 0; --s) x = lusztig_T(co.word.letters[s], x);
            for (auto& [w, c] : x) {
                (void)c;
                if (!w.ew.empty() || w.k != std::vector<long>(rs.n, 0))
                    throw std::logic_error("PBW root vector retained E/K letters");
            }
            // weight check
            RootVec wt(rs.n, 0);
            if (!x.empty()) {
                for (int i : x.begin()->first.fw) wt[i] += 1;
                if (wt != co.betas[t]) throw std::logic_error("PBW root vector has wrong weight");
            }
            out.push_back(std::move(x));
        }
        return out;
    }

    // ---- free F-word spaces and the quantum Serre ideal -------------------

    // All free words on the alphabet {F_1..F_n} with content nu, sorted.
    const std::vector<std::vector<int>>& words_of_content(const RootVec& nu) {
        auto it = word_cache_.find(nu);
        if (it != word_cache_.end()) return it->second;
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        RootVec rem = nu;
        std::function<void()> dfs = [&]() {
            bool done = std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
            if (done) {
                words.push_back(cur);
                return;
            }
            for (int i = 0; i < rs.n; ++i) {
                if (rem[i] == 0) continue;
                rem[i]--;
                cur.push_back(i);
                dfs();
                cur.pop_back();
                rem[i]++;
            }
        };
        dfs();
        std::sort(words.begin(), words.end());
        return word_cache_.emplace(nu, std::move(words)).first->second;
    }

    long word_index(const RootVec& nu, const std::vector<int>& w) {
        auto& words = words_of_content(nu);
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w) throw std::logic_error("word not in content space");
        return (long)(it - words.begin());
    }

    // sparse coordinate vector of a pure F-element in the content space
    SparseVec<S> f_vector(const RootVec& nu, const QElem& x) {
        SparseVec<S> v;
        for (auto& [w, c] : x) {
            if (!w.ew.empty()) throw std::logic_error("not a pure F-element");
            v[word_index(nu, w.fw)] = c;
        }
        return v;
    }

    // quantum Serre relation for the ordered pair (i,j), as free F-words
    QElem serre_elem(int i, int j) const {
        long m = 1 - rs.cartan[i][j];
        QElem e;
        for (long r = 0; r <= m; ++r) {
            long s = m - r;
            CanonWord w;
            w.k.assign(rs.n, 0);
            for (long t = 0; t < s; ++t) w.fw.push_back(i);
            w.fw.push_back(j);
            for (long t = 0; t < r; ++t) w.fw.push_back(i);
            S coef = Ctx::one() / (ctx.qfact_s(s, rs.d[i]) * ctx.qfact_s(r, rs.d[i]));
            if (r % 2) coef = Ctx::zero() - coef;
            add_term(e, w, coef);
        }
        return e;
    }

    // Row space of the weight-nu component of the two-sided quantum Serre
    // ideal inside the free algebra on F_1..F_n. Cached per weight.
    const RowSpace<S>& serre_component(const RootVec& nu) {
        auto it = serre_cache_.find(nu);
        if (it != serre_cache_.end()) return it->second;
        RowSpace<S> rows(false);
        for (int i = 0; i < rs.n; ++i)
            for (int j = 0; j < rs.n; ++j) {
                if (i == j) continue;
                long m = 1 - rs.cartan[i][j];
                RootVec swt(rs.n, 0);
                swt[i] += (int)m;
                swt[j] += 1;
                RootVec rem(rs.n);
                bool ok = true;
                for (int k = 0; k < rs.n; ++k) {
                    rem[k] = nu[k] - swt[k];
                    if (rem[k] < 0) ok = false;
                }
                if (!ok) continue;
                QElem serre = serre_elem(i, j);
                // enumerate splittings rem = tau1 + tau2 and all word pairs
                std::vector<RootVec> taus = sub_contents(rem);
                for (auto& t1 : taus) {
                    RootVec t2(rs.n);
                    for (int k = 0; k < rs.n; ++k) t2[k] = rem[k] - t1[k];
                    auto& w1s = words_of_content(t1);
                    auto& w2s = words_of_content(t2);
                    for (auto& w1 : w1s)
                        for (auto& w2 : w2s) {
                            SparseVec<S> row;
                            for (auto& [sw, sc] : serre) {
                                std::vector<int> full = w1;
                                full.insert(full.end(), sw.fw.begin(), sw.fw.end());
                                full.insert(full.end(), w2.begin(), w2.end());
                                long idx = word_index(nu, full);
                                auto rit = row.find(idx);
                                if (rit == row.end()) row.emplace(idx, sc);
                                else {
                                    rit->second += sc;
                                    if (Ctx::is_zero(rit->second)) row.erase(rit);
                                }
                            }
                            if (!row.empty()) rows.insert(std::move(row));
                        }
                }
            }
        return serre_cache_.emplace(nu, std::move(rows)).first->second;
    }

    // all componentwise-subvectors of rem
    std::vector<RootVec> sub_contents(const RootVec& rem) const {
        std::vector<RootVec> out;
        RootVec cur(rs.n, 0);
        std::function<void(int)> dfs = [&](int k) {
            if (k == rs.n) {
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem[k]; ++v) {
                cur[k] = v;
                dfs(k + 1);
            }
            cur[k] = 0;
        };
        dfs(0);
        return out;
    }

    // ---- PBW expansion ----------------------------------------------------

    // PBW exponent vectors s with sum s_t beta_t = nu
    std::vector<std::vector<long>> pbw_exponents(const ConvexOrder& co, const RootVec& nu) const {
        long N = (long)co.betas.size();
        std::vector<std::vector<long>> out;
        std::vector<long> cur(N, 0);
        RootVec rem = nu;
        std::function<void(long)> dfs = [&](long t) {
            bool done = std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
            if (done) {
                out.push_back(cur);
                // keep exploring: later positions must stay 0 beyond this? no:
                // exponents after t are all zero in cur; record and return
                return;
            }
            if (t == N) return;
            long maxm = LONG_MAX;
            for (int k = 0; k < rs.n; ++k)
                if (co.betas[t][k] > 0) maxm = std::min(maxm, (long)(rem[k] / co.betas[t][k]));
            for (long m = 0; m <= maxm; ++m) {
                cur[t] = m;
                for (int k = 0; k < rs.n; ++k) rem[k] -= m * co.betas[t][k];
                bool neg = std::any_of(rem.begin(), rem.end(), [](int x) { return x < 0; });
                if (!neg) dfs(t + 1);
                for (int k = 0; k < rs.n; ++k) rem[k] += m * co.betas[t][k];
            }
            cur[t] = 0;
        };
        dfs(0);
        return out;
    }

    // expands x (pure F-element of weight -nu) in the PBW basis of the order
    std::map<std::vector<long>, S> pbw_expand(const QElem& x, const ConvexOrder& co,
                                              const std::vector<QElem>& roots) {
        RootVec nu(rs.n, 0);
        if (x.empty()) return {};
        for (int i : x.begin()->first.fw) nu[i] += 1;
        auto exps = pbw_exponents(co, nu);
        const RowSpace<S>& ideal = serre_component(nu);
        std::vector<SparseVec<S>> gens;
        for (auto& s : exps) {
            QElem mono = scalar(Ctx::one());
            for (long t = 0; t < (long)s.size(); ++t)
                for (long r = 0; r < s[t]; ++r) mono = multiply(mono, roots[t]);
            gens.push_back(ideal.reduce(f_vector(nu, mono)));
        }
        SparseVec<S> target = ideal.reduce(f_vector(nu, x));
        auto sol = solve_combination(gens, target);
        if (!sol) throw std::logic_error("PBW expansion failed (inconsistent system)");
        std::map<std::vector<long>, S> out;
        for (long k = 0; k < (long)exps.size(); ++k)
            if (!Ctx::is_zero((*sol)[k])) out[exps[k]] = (*sol)[k];
        return out;
    }

private:
    std::map<RootVec, std::vector<std::vector<int>>> word_cache_;
    std::map<RootVec, RowSpace<S>> serre_cache_;
};

// ---------------------------------------------------------------------------
// L-S relations and the quantum degree cone.

template <class S>
struct LSRelationT {
    long i, j;               // pair in the convex order, i < j
    long qpow;               // exponent in F_bj F_bi = q^qpow F_bi F_bj + ...
    std::map<std::vector<long>, S> terms;  // middle monomial -> coefficient
};

template <class Ctx>
LSRelationT<typename Ctx::Scalar> ls_relation(QEngine<Ctx>& eng, const ConvexOrder& co,
                                              const std::vector<typename QEngine<Ctx>::QElem>& roots,
                                              long i, long j) {
    if (!(i < j)) throw std::invalid_argument("ls_relation requires i < j");
    auto lhs = eng.multiply(roots[j], roots[i]);
    auto exp = eng.pbw_expand(lhs, co, roots);
    LSRelationT<typename Ctx::Scalar> rel;
    rel.i = i;
    rel.j = j;
    rel.qpow = -eng.rs.bilinear(co.betas[i], co.betas[j]);
    long N = (long)co.betas.size();
    std::vector<long> lead(N, 0);
    lead[i] = 1;
    lead[j] = 1;
    for (auto& [s, c] : exp) {
        if (s == lead) continue;  // the q-commutation term
        for (long t = 0; t < N; ++t)
            if (s[t] != 0 && !(t > i && t < j))
                throw std::logic_error("L-S support outside the open interval (i,j)");
        rel.terms[s] = c;
    }
    auto it = exp.find(lead);
    if (it == exp.end()) throw std::logic_error("L-S leading term missing");
    if (!(it->second == eng.ctx.q_pow(rel.qpow)))
        throw std::logic_error("L-S leading coefficient is not q^{-(b_i,b_j)}");
    return rel;
}

struct QuantumConeResult {
    StrictCone cone;                       // in the canonical root ordering
    std::vector<PairSupports> relations;   // supports in convex-order positions
};

template <class Ctx>
QuantumConeResult quantum_degree_cone(QEngine<Ctx>& eng, const ConvexOrder& co) {
    auto roots = eng.pbw_root_vectors(co);
    QuantumConeResult res;
    res.cone.ambient = eng.rs.labels;
    long N = (long)co.betas.size();
    for (long i = 0; i < N; ++i)
        for (long j = i + 1; j < N; ++j) {
            auto rel = ls_relation(eng, co, roots, i, j);
            PairSupports ps;
            ps.i = i;
            ps.j = j;
            for (auto& [s, c] : rel.terms) {
                (void)c;
                ps.supports.push_back(s);
                LinearForm f;
                f.a.assign(N, 0);
                f.a[eng.rs.root_index(co.betas[i])] += 1;
                f.a[eng.rs.root_index(co.betas[j])] += 1;
                for (long t = 0; t < N; ++t)
                    f.a[eng.rs.root_index(co.betas[t])] -= s[t];
                res.cone.add_form(std::move(f));
            }
            res.relations.push_back(std::move(ps));
        }
    res.cone.dedupe_and_sort();
    return res;
}

// ---------------------------------------------------------------------------
// Specialization driver: evaluates at a random rational q0 derived from a
// seed; results must agree across two independent seeds.

inline Rat random_q0(unsigned long seed) {
    // splitmix64 steps; numerator/denominator in [2,97], distinct
    auto next = [state = seed + 0x9e3779b97f4a7c15ULL]() mutable {
        unsigned long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    unsigned long num, den;
    do {
        num = 2 + next() % 96;
        den = 2 + next() % 96;
    } while (num == den);
    return rat((long)num, (long)den);
}

// Quantum cone in specialized mode with two-seed agreement. Throws if the
// two specializations disagree on any support.
inline QuantumConeResult quantum_cone_specialized(const RootSystem& rs, const ConvexOrder& co,
                                                  unsigned long seed) {
    QEngine<SpecializedQ> e1(rs, SpecializedQ(random_q0(seed)));
    QEngine<SpecializedQ> e2(rs, SpecializedQ(random_q0(seed ^ 0xabcdef1234567890ULL)));
    auto r1 = quantum_degree_cone(e1, co);
    auto r2 = quantum_degree_cone(e2, co);
    auto key = [](const QuantumConeResult& r) {
        std::vector<std::vector<std::vector<long>>> k;
        for (auto& ps : r.relations) k.push_back(ps.supports);
        return k;
    };
    if (key(r1) != key(r2))
        throw std::runtime_error("specialized supports disagree between the two seeds");
    return r1;
}

inline QuantumConeResult quantum_cone_exact(const RootSystem& rs, const ConvexOrder& co) {
    QEngine<ExactQ> e(rs, ExactQ{});
    return quantum_degree_cone(e, co);
}

}  // namespace degcone
