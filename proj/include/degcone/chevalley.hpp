#pragma once
#include "rational.hpp"
#include "roots.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degcone {

// Chevalley structure constants N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b},
// determined by choosing N = p+1 on extraspecial pairs (minimal first factor
// in the height-then-canonical order) and propagating through the standard
// rational identities.  Signs are deterministic; |N_{a,b}| = p+1 throughout.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(const RootSystem& rs) : rs_(rs) {
        long N = rs_.num_positive_roots();
        rank_.resize(N);
        std::vector<long> idx(N);
        for (long k = 0; k < N; ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](long a, long b) {
            int ha = rs_.height(rs_.positive_roots[a]);
            int hb = rs_.height(rs_.positive_roots[b]);
            return ha != hb ? ha < hb : a < b;
        });
        for (long r = 0; r < N; ++r) rank_[idx[r]] = r;
        for (long r = 0; r < N; ++r) build_sums_to(idx[r]);
    }

    // N_{a,b} for positive roots (canonical indices); 0 if the sum is not a root.
    long n_pos(long a, long b) const {
        auto it = n_.find({a, b});
        return it == n_.end() ? 0 : it->second;
    }

    // N_{a,-b} for distinct positive roots a, b; 0 if a-b is not a root.
    long n_mixed(long a, long b) const {
        if (a == b) throw std::invalid_argument("n_mixed: equal roots");
        RootVec diff = sub(rs_.positive_roots[a], rs_.positive_roots[b]);
        if (rs_.is_positive_root(diff)) {
            long d = rs_.root_index(diff);
            // triple (a, -b, b-a): N_{a,-b}/|b-a|^2 = N_{-b,b-a}/|a|^2,
            // N_{-b,b-a} = -N_{b,a-b}
            return ratio(norm2(diff), norm2_idx(a), -n_pos(b, d));
        }
        RootVec ndiff = neg(diff);
        if (rs_.is_positive_root(ndiff)) {
            long d = rs_.root_index(ndiff);
            // triple (a, -b, b-a): N_{a,-b}/|b-a|^2 = N_{b-a,a}/|b|^2
            return ratio(norm2(ndiff), norm2_idx(b), -n_pos(a, d));
        }
        return 0;
    }

    // extraspecial pair (eps, eta) of a non-simple positive root
    std::pair<long, long> extraspecial(long g) const {
        auto it = extra_.find(g);
        if (it == extra_.end()) throw std::invalid_argument("extraspecial: simple root");
        return it->second;
    }

    // largest p with beta_b - p beta_a a root
    long string_down(long a, long b) const {
        long p = 0;
        RootVec v = rs_.positive_roots[b];
        while (true) {
            v = sub(v, rs_.positive_roots[a]);
            if (!is_root(v)) break;
            ++p;
        }
        return p;
    }

    // coefficients of the coroot beta^vee over the simple coroots
    std::vector<long> coroot_coeffs(long g) const {
        const RootVec& v = rs_.positive_roots[g];
        long db = norm2_idx(g) / 2;
        std::vector<long> c(rs_.n);
        for (int i = 0; i < rs_.n; ++i) {
            long num = (long)v[i] * rs_.d[i];
            if (num % db != 0) throw std::logic_error("coroot: non-integer coefficient");
            c[i] = num / db;
        }
        return c;
    }

private:
    static RootVec sub(const RootVec& a, const RootVec& b) {
        RootVec r = a;
        for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
        return r;
    }
    static RootVec neg(const RootVec& a) {
        RootVec r = a;
        for (auto& x : r) x = -x;
        return r;
    }
    bool is_root(const RootVec& v) const {
        return rs_.is_positive_root(v) || rs_.is_positive_root(neg(v));
    }
    long norm2(const RootVec& v) const { return rs_.bilinear(v, v); }
    long norm2_idx(long g) const { return norm2(rs_.positive_roots[g]); }
    static long ratio(long num_norm, long den_norm, long n) {
        long t = n * num_norm;
        if (t % den_norm != 0) throw std::logic_error("non-integer structure constant");
        return t / den_norm;
    }

    void set(long a, long b, long v) {
        n_[{a, b}] = v;
        n_[{b, a}] = -v;
    }

    void build_sums_to(long g) {
        const RootVec& gv = rs_.positive_roots[g];
        if (rs_.height(gv) == 1) return;
        long N = rs_.num_positive_roots();
        // candidate decompositions g = a + b with a, b positive roots
        std::vector<std::pair<long, long>> pairs;
        long eps = -1;
        for (long a = 0; a < N; ++a) {
            RootVec rest = sub(gv, rs_.positive_roots[a]);
            if (!rs_.is_positive_root(rest)) continue;
            long b = rs_.root_index(rest);
            if (rank_[a] < rank_[b]) {
                pairs.push_back({a, b});
                if (eps < 0 || rank_[a] < rank_[eps]) eps = a;
            }
        }
        long eta = rs_.root_index(sub(gv, rs_.positive_roots[eps]));
        set(eps, eta, string_down(eps, eta) + 1);
        extra_[g] = {eps, eta};
        long g2 = norm2_idx(g);
        for (auto& [a, b] : pairs) {
            if (a == eps) continue;
            // quadruple (eps, eta, -a, -b) with eps + eta - a - b = 0:
            //   N_{eps,eta} N_{-a,-b}/|g|^2 + N_{eta,-a} N_{eps,-b}/|eta-a|^2
            //     + N_{-a,eps} N_{eta,-b}/|eps-a|^2 = 0
            Rat acc(0);
            RootVec ea = sub(rs_.positive_roots[eta], rs_.positive_roots[a]);
            if (is_root(ea))
                acc += Rat(n_mixed(eta, a)) * Rat(n_mixed(eps, b)) / Rat(norm2(ea));
            RootVec sa = sub(rs_.positive_roots[eps], rs_.positive_roots[a]);
            if (is_root(sa))
                acc += Rat(-n_mixed(a, eps)) * Rat(n_mixed(eta, b)) / Rat(norm2(sa));
            Rat val = acc * Rat(g2) / Rat(n_pos(eps, eta));
            if (val.get_den() != 1) throw std::logic_error("non-integer structure constant");
            set(a, b, Int(val.get_num()).get_si());
        }
    }

    const RootSystem& rs_;
    std::vector<long> rank_;
    std::map<std::pair<long, long>, long> n_;
    std::map<long, std::pair<long, long>> extra_;
};

}  // namespace degcone
