#pragma once

// Sparse exact linear algebra over CycScalar.
//
// Vectors are sorted (key, value) lists with no stored zeros. Keys are int64 so
// that tensor indices (i * dim + j, ...) fit without a separate type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pointed/cyclotomic.hpp"

namespace pointed {

using Key = std::int64_t;
using Scalar = CycScalar;

class SparseVec {
public:
    using Entry = std::pair<Key, Scalar>;

    SparseVec() = default;
    static SparseVec unit(Key k, Scalar c = Scalar(1)) {
        SparseVec v;
        if (!c.is_zero()) v.e_.emplace_back(k, std::move(c));
        return v;
    }
    /// Takes entries that are already sorted by key, unique and nonzero.
    static SparseVec from_sorted(std::vector<Entry> entries) {
        SparseVec v;
        v.e_ = std::move(entries);
        return v;
    }

    bool empty() const noexcept { return e_.empty(); }
    std::size_t size() const noexcept { return e_.size(); }
    const std::vector<Entry>& entries() const noexcept { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    Scalar get(Key k) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), k,
                                   [](const Entry& a, Key key) { return a.first < key; });
        if (it != e_.end() && it->first == k) return it->second;
        return Scalar();
    }

    Key leading_key() const { return e_.front().first; }

    SparseVec scaled(const Scalar& c) const {
        if (c.is_zero()) return {};
        SparseVec r;
        r.e_.reserve(e_.size());
        for (const auto& [k, v] : e_) r.e_.emplace_back(k, v * c);
        return r;
    }

    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) { return axpy(a, Scalar(1), b); }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) { return axpy(a, Scalar(-1), b); }
    SparseVec operator-() const { return scaled(Scalar(-1)); }
    SparseVec& operator+=(const SparseVec& o) { return *this = *this + o; }
    SparseVec& operator-=(const SparseVec& o) { return *this = *this - o; }

    /// a + c * b
    static SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
        if (c.is_zero() || b.empty()) return a;
        SparseVec r;
        r.e_.reserve(a.e_.size() + b.e_.size());
        auto i = a.e_.begin(), j = b.e_.begin();
        while (i != a.e_.end() || j != b.e_.end()) {
            if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first)) {
                r.e_.push_back(*i++);
            } else if (i == a.e_.end() || j->first < i->first) {
                r.e_.emplace_back(j->first, j->second * c);
                ++j;
            } else {
                Scalar s = i->second + j->second * c;
                if (!s.is_zero()) r.e_.emplace_back(i->first, std::move(s));
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) {
        if (a.e_.size() != b.e_.size()) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i].first != b.e_[i].first || a.e_[i].second != b.e_[i].second) return false;
        }
        return true;
    }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

private:
    std::vector<Entry> e_;
};

/// Collects (key, value) contributions in any order; finish() sorts and merges.
class Accumulator {
public:
    void add(Key k, const Scalar& v) {
        if (!v.is_zero()) buf_.emplace_back(k, v);
    }
    void add(const SparseVec& v, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        bool one = c.is_one();
        for (const auto& [k, x] : v) buf_.emplace_back(k, one ? x : x * c);
    }
    /// Adds c * v with every key mapped through f.
    template <class F>
    void add_mapped(const SparseVec& v, const Scalar& c, F&& f) {
        if (c.is_zero()) return;
        for (const auto& [k, x] : v) buf_.emplace_back(f(k), x * c);
    }
    bool empty() const noexcept { return buf_.empty(); }

    SparseVec finish() {
        std::sort(buf_.begin(), buf_.end(),
                  [](const SparseVec::Entry& a, const SparseVec::Entry& b) { return a.first < b.first; });
        std::vector<SparseVec::Entry> out;
        out.reserve(buf_.size());
        for (auto& e : buf_) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second += e.second;
            } else {
                if (!out.empty() && out.back().second.is_zero()) out.pop_back();
                out.push_back(std::move(e));
            }
        }
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        buf_.clear();
        return SparseVec::from_sorted(std::move(out));
    }

private:
    std::vector<SparseVec::Entry> buf_;
};

/// Incremental row echelon form. Each stored row has a leading key with
/// coefficient 1 and remembers how it was built from the inserted vectors, so
/// dependent inputs come back expressed in terms of the independent ones.
class EchelonBasis {
public:
    struct Result {
        bool independent;
        int index;             // id assigned to the vector when independent
        SparseVec combination;  // when dependent: v = sum combination[id] * inserted[id]
    };

    /// Reduces v; if independent, stores it under a fresh id.
    Result insert(const SparseVec& v) {
        auto [residual, combo] = reduce(v);
        if (residual.empty()) return {false, -1, std::move(combo)};
        int id = count_++;
        // residual = v - sum combo * inserted  =>  stored row relation
        Scalar lead = residual.entries().front().second;
        Scalar inv = lead.inverse();
        SparseVec row = residual.scaled(inv);
        // row = (v_id - combo) * inv, in terms of inserted ids
        SparseVec rel = SparseVec::unit(id) - combo;
        rel = rel.scaled(inv);
        Key lead_key = row.leading_key();
        pivots_.emplace(lead_key, Row{std::move(row), std::move(rel)});
        return {true, id, {}};
    }

    /// Returns (residual, combination) with v = residual + sum combination[id] * inserted[id].
    std::pair<SparseVec, SparseVec> reduce(const SparseVec& v) const {
        std::map<Key, Scalar> work;
        for (const auto& [k, x] : v) work.emplace(k, x);
        Accumulator combo;
        std::vector<SparseVec::Entry> residual;
        while (!work.empty()) {
            auto it = work.begin();
            Key k = it->first;
            Scalar c = it->second;
            auto p = pivots_.find(k);
            if (p == pivots_.end()) {
                residual.emplace_back(k, c);
                work.erase(it);
                continue;
            }
            for (const auto& [rk, rv] : p->second.row) {
                Scalar nv = work[rk] - c * rv;
                if (nv.is_zero()) {
                    work.erase(rk);
                } else {
                    work[rk] = std::move(nv);
                }
            }
            combo.add(p->second.relation, c);
        }
        return {SparseVec::from_sorted(std::move(residual)), combo.finish()};
    }

    int rank() const noexcept { return count_; }

private:
    struct Row {
        SparseVec row;
        SparseVec relation;
    };
    std::map<Key, Row> pivots_;
    int count_ = 0;
};

/// Basis of {x : sum_j x_j * columns[j] = 0}, as sparse vectors over column ids.
inline std::vector<SparseVec> nullspace(const std::vector<SparseVec>& columns) {
    EchelonBasis basis;
    std::vector<int> id_to_col;
    std::vector<SparseVec> out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto r = basis.insert(columns[j]);
        if (r.independent) {
            id_to_col.push_back(static_cast<int>(j));
        } else {
            Accumulator acc;
            acc.add(static_cast<Key>(j), Scalar(1));
            for (const auto& [id, c] : r.combination) acc.add(id_to_col[id], -c);
            out.push_back(acc.finish());
        }
    }
    return out;
}

inline int rank(const std::vector<SparseVec>& columns) {
    EchelonBasis basis;
    for (const auto& c : columns) basis.insert(c);
    return basis.rank();
}

}  // namespace pointed
