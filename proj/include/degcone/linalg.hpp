#pragma once
#include "rational.hpp"
#include <map>
#include <optional>
#include <vector>

namespace degcone {

// Sparse vector over a field F, keyed by column index.
template <class F>
using SparseVec = std::map<long, F>;

template <class F>
void axpy(SparseVec<F>& y, const F& a, const SparseVec<F>& x) {
    for (auto& [col, v] : x) {
        auto it = y.find(col);
        if (it == y.end()) {
            F t = a * v;
            if (!(t == F(0))) y.emplace(col, std::move(t));
        } else {
            it->second += a * v;
            if (it->second == F(0)) y.erase(it);
        }
    }
}

// Row space maintained in reduced echelon form. Pivot of each row is the
// first structurally nonzero column; rows are inter-reduced so membership
// tests and coordinate extraction are deterministic. Each row optionally
// carries a dense provenance vector expressing it as a combination of the
// vectors inserted so far.
template <class F>
class RowSpace {
public:
    struct Row {
        SparseVec<F> v;              // pivot coefficient normalized to 1
        std::vector<F> prov;         // combination of inserted vectors
    };

    explicit RowSpace(bool track_provenance = false) : track_(track_provenance) {}

    long rank() const { return (long)rows_.size(); }
    const std::map<long, Row>& rows() const { return rows_; }

    // Reduces v against the row space; fills combo (if requested) with the
    // coefficients a_i such that v - sum a_i row_i = residual.
    SparseVec<F> reduce(SparseVec<F> v, std::vector<F>* combo = nullptr) const {
        if (combo) combo->assign(n_inserted_, F(0));
        for (auto it = v.begin(); it != v.end();) {
            auto rit = rows_.find(it->first);
            if (rit == rows_.end()) { ++it; continue; }
            F a = it->second;
            if (combo)
                for (long k = 0; k < (long)rit->second.prov.size(); ++k)
                    (*combo)[k] += a * rit->second.prov[k];
            F na = F(0) - a;
            axpy(v, na, rit->second.v);
            it = v.upper_bound(rit->first);
        }
        return v;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    // Inserts v; returns true if it increased the rank.
    bool insert(SparseVec<F> v) {
        std::vector<F> combo;
        SparseVec<F> r = reduce(std::move(v), track_ ? &combo : nullptr);
        long id = n_inserted_++;
        if (track_)
            for (auto& rowp : rows_) rowp.second.prov.push_back(F(0));
        if (r.empty()) return false;
        long piv = r.begin()->first;
        F lead = r.begin()->second;
        F inv = F(1) / lead;
        for (auto& [c, val] : r) val = val * inv;
        Row row;
        row.v = std::move(r);
        if (track_) {
            row.prov.assign(n_inserted_, F(0));
            for (long k = 0; k < id; ++k) row.prov[k] = F(0) - combo[k] * inv;
            row.prov[id] = inv;
        }
        // back-substitute into existing rows to keep the reduced form
        for (auto& [p, other] : rows_) {
            auto it = other.v.find(piv);
            if (it == other.v.end()) continue;
            F a = it->second;
            if (track_)
                for (long k = 0; k < n_inserted_; ++k)
                    other.prov[k] -= a * row.prov[k];
            F na = F(0) - a;
            axpy(other.v, na, row.v);
        }
        rows_.emplace(piv, std::move(row));
        return true;
    }

    long inserted() const { return n_inserted_; }

private:
    bool track_;
    std::map<long, Row> rows_;   // pivot column -> row
    long n_inserted_ = 0;
};

// Coefficients c with target = sum c_i * gens_i, if solvable.
template <class F>
std::optional<std::vector<F>> solve_combination(const std::vector<SparseVec<F>>& gens,
                                                const SparseVec<F>& target) {
    RowSpace<F> rs(true);
    for (auto& g : gens) rs.insert(g);
    std::vector<F> combo;
    SparseVec<F> r = rs.reduce(target, &combo);
    if (!r.empty()) return std::nullopt;
    return combo;
}

// Dense exact RREF for small matrices; returns (rank, echelon form, pivots).
template <class F>
struct RrefResult {
    long rank;
    std::vector<std::vector<F>> mat;
    std::vector<long> pivots;
};

template <class F>
RrefResult<F> rref(std::vector<std::vector<F>> m) {
    RrefResult<F> res;
    res.rank = 0;
    long nr = (long)m.size();
    long nc = nr ? (long)m[0].size() : 0;
    long row = 0;
    for (long col = 0; col < nc && row < nr; ++col) {
        long sel = -1;
        for (long r = row; r < nr; ++r)
            if (!(m[r][col] == F(0))) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        F inv = F(1) / m[row][col];
        for (long c = col; c < nc; ++c) m[row][c] = m[row][c] * inv;
        for (long r = 0; r < nr; ++r) {
            if (r == row || m[r][col] == F(0)) continue;
            F a = m[r][col];
            for (long c = col; c < nc; ++c) m[r][c] -= a * m[row][c];
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    res.mat = std::move(m);
    return res;
}

}  // namespace degcone
