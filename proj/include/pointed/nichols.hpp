#pragma once

// Degree-truncated Nichols algebras B(V) = T(V) / (+ ker Q_d).
//
// Words x_{w1} ... x_{wd} are encoded in base dim(V) with w1 most significant,
// so numeric order is lexicographic order. B^d gets the basis of words whose
// symmetrized images are independent when scanned in lex order; every other
// word is stored as its projection onto that basis.

#include <cstdlib>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pointed/linalg.hpp"
#include "pointed/parallel.hpp"
#include "pointed/yetter_drinfeld.hpp"

namespace pointed {

inline long long default_tensor_budget() {
    if (const char* env = std::getenv("POINTED_MAX_TENSOR_DIM")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 4096;
}

using Word = std::vector<int>;

inline Key encode_word(const Word& w, int n) {
    Key k = 0;
    for (int x : w) k = k * n + x;
    return k;
}

inline Word decode_word(Key k, int n, int d) {
    Word w(d);
    for (int i = d - 1; i >= 0; --i) {
        w[i] = static_cast<int>(k % n);
        k /= n;
    }
    return w;
}

inline long long checked_power(int n, int d, long long budget) {
    long long p = 1;
    for (int i = 0; i < d; ++i) {
        p *= n;
        if (p > budget)
            throw ResourceError("dim(V)^" + std::to_string(d) + " exceeds the tensor budget " + std::to_string(budget) +
                                "; lower the degree cap or raise POINTED_MAX_TENSOR_DIM");
    }
    return p;
}

enum class WordStrategy { LeftmostDescent, RightmostDescent };

/// A reduced expression of perm as positions i of adjacent transpositions s_i,
/// listed in the order they act (first entry acts first). Stripping right descents
/// perm <- perm * s_i until the identity gives perm = s_{ik} ... s_{i1}.
inline std::vector<int> reduced_word(std::vector<int> perm, WordStrategy strategy) {
    std::vector<int> out;
    int d = static_cast<int>(perm.size());
    while (true) {
        int pick = -1;
        for (int i = 0; i + 1 < d; ++i) {
            if (perm[i] > perm[i + 1]) {
                pick = i;
                if (strategy == WordStrategy::LeftmostDescent) break;
            }
        }
        if (pick < 0) break;
        std::swap(perm[pick], perm[pick + 1]);
        out.push_back(pick);
    }
    return out;
}

/// Applies the braid generator at position p (acting on letters p, p+1) to a word.
inline CycScalar braid_step(const YDModule& V, Word& w, int p) {
    auto m = V.braid(w[p], w[p + 1]);
    w[p + 1] = w[p];
    w[p] = m.index;
    return m.coef;
}

/// Columns of the quantum symmetrizer Q_d on V^{(x) d}, one per word in lex order.
inline std::vector<SparseVec> symmetrizer_columns(const YDModule& V, int d, WordStrategy strategy,
                                                  long long budget = default_tensor_budget(), int threads = 1) {
    int n = V.dim();
    long long words = checked_power(n, d, budget);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> lifts;
    do {
        lifts.push_back(reduced_word(perm, strategy));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<SparseVec> cols(words);
    parallel_for(words, threads, [&](long long k) {
        Word base = decode_word(k, n, d);
        Accumulator acc;
        for (const auto& lift : lifts) {
            Word w = base;
            CycScalar c(1);
            for (int p : lift) c *= braid_step(V, w, p);
            acc.add(encode_word(w, n), c);
        }
        cols[k] = acc.finish();
    });
    return cols;
}

/// Braid relations for the generators on V^{(x) d}, checked on every basis word.
inline bool braid_relations_hold(const YDModule& V, int d, long long budget = default_tensor_budget()) {
    int n = V.dim();
    long long words = checked_power(n, d, budget);
    auto apply = [&](Word w, const std::vector<int>& ps) {
        CycScalar c(1);
        for (int p : ps) c *= braid_step(V, w, p);
        return std::make_pair(w, c);
    };
    for (long long k = 0; k < words; ++k) {
        Word w = decode_word(k, n, d);
        for (int i = 0; i + 1 < d; ++i) {
            for (int j = i + 1; j + 1 < d; ++j) {
                if (j == i + 1) {
                    if (apply(w, {i, j, i}) != apply(w, {j, i, j})) return false;
                } else if (apply(w, {i, j}) != apply(w, {j, i})) {
                    return false;
                }
            }
        }
    }
    return true;
}

class Nichols {
public:
    struct Options {
        int cap = -1;  // -1: compute until some B^d vanishes
        long long budget = default_tensor_budget();
        int threads = 1;
        WordStrategy strategy = WordStrategy::LeftmostDescent;
    };

    Nichols(ModulePtr V, Options opt) : V_(std::move(V)), opt_(opt) { build(); }
    explicit Nichols(ModulePtr V) : Nichols(std::move(V), Options{}) {}

    const YDModule& module() const noexcept { return *V_; }
    const ModulePtr& module_ptr() const noexcept { return V_; }

    /// True when some B^d = 0 was reached, so the algebra is complete.
    bool finite() const noexcept { return finite_; }
    /// Highest degree with a computed basis (the top degree when finite).
    int max_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
    /// Products are defined up to this total degree; -1 when unbounded.
    int cap() const noexcept { return finite_ ? -1 : max_degree(); }
    int dim() const noexcept { return total_; }
    int dim(int d) const { return d >= 0 && d <= max_degree() ? dims_[d] : 0; }
    const std::vector<int>& hilbert_series() const noexcept { return dims_; }
    int offset(int d) const { return offsets_.at(d); }
    int degree(int b) const { return degree_of_.at(b); }
    const Word& word(int b) const { return basis_words_.at(b); }
    /// The G-degree of a basis element (product of the letter degrees).
    GroupElt group_degree(int b) const { return group_degree_.at(b); }
    std::string label(int b) const {
        if (degree_of_[b] == 0) return "1";
        std::string s;
        for (int x : basis_words_[b]) s += (s.empty() ? "" : "*") + V_->label(x);
        return s;
    }

    /// Projection of a word of V^{(x) d} onto B^d, over global indices.
    SparseVec project(const Word& w) const {
        int d = static_cast<int>(w.size());
        if (d > max_degree()) {
            if (finite_) return {};
            throw CapError("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(max_degree()));
        }
        return projections_[d][encode_word(w, V_->dim())];
    }

    SparseVec product(int a, int b) const {
        Word w = basis_words_[a];
        w.insert(w.end(), basis_words_[b].begin(), basis_words_[b].end());
        return project(w);
    }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const {
        Accumulator acc;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) acc.add(product(static_cast<int>(a), static_cast<int>(b)), ca * cb);
        return acc.finish();
    }

    /// s . b
    const SparseVec& act(GroupElt s, int b) const { return action_[s.index][b]; }

    /// Braided coproduct over keys r1 * dim() + r2.
    const SparseVec& coproduct(int b) const { return coproduct_[b]; }

    /// Q_d from the given strategy, for cross-checking.
    std::vector<SparseVec> symmetrizer(int d, WordStrategy s) const {
        return symmetrizer_columns(*V_, d, s, opt_.budget, opt_.threads);
    }

    /// v in ker Q_d for a combination of words of length d.
    bool in_ideal(const std::vector<std::pair<Word, CycScalar>>& v) const {
        Accumulator acc;
        for (const auto& [w, c] : v) acc.add(project(w), c);
        return acc.finish().empty();
    }

    /// Number of nonzero primitive elements in degrees 2..max_degree (0 for a Nichols algebra).
    int primitive_defect() const {
        int defect = 0;
        for (int d = 2; d <= max_degree(); ++d) {
            std::vector<SparseVec> cols;
            for (int b = offsets_[d]; b < offsets_[d] + dims_[d]; ++b) {
                Accumulator acc;
                for (const auto& [k, c] : coproduct_[b]) {
                    int r1 = static_cast<int>(k / total_), r2 = static_cast<int>(k % total_);
                    if (degree_of_[r1] > 0 && degree_of_[r2] > 0) acc.add(k, c);
                }
                cols.push_back(acc.finish());
            }
            defect += static_cast<int>(nullspace(cols).size());
        }
        return defect;
    }

    bool is_exterior_type() const { return V_->braiding_is_minus_flip(); }

private:
    void build() {
        const YDModule& V = *V_;
        int n = V.dim();
        // degree 0
        dims_ = {1};
        offsets_ = {0};
        basis_words_ = {Word{}};
        degree_of_ = {0};
        projections_ = {{SparseVec::unit(0)}};
        int limit = opt_.cap;
        for (int d = 1; limit < 0 || d <= limit; ++d) {
            long long words = checked_power(n, d, opt_.budget);
            std::vector<SparseVec> cols;
            if (d == 1) {
                cols.resize(words);
                for (int x = 0; x < n; ++x) cols[x] = SparseVec::unit(x);
            } else {
                cols = symmetrizer_columns(V, d, opt_.strategy, opt_.budget, opt_.threads);
            }
            EchelonBasis eb;
            std::vector<int> pivots;  // local id -> word key
            std::vector<SparseVec> combos(words);
            std::vector<int> id_of(words, -1);
            for (long long k = 0; k < words; ++k) {
                auto r = eb.insert(cols[k]);
                if (r.independent) {
                    id_of[k] = r.index;
                    pivots.push_back(static_cast<int>(k));
                } else {
                    combos[k] = std::move(r.combination);
                }
            }
            if (pivots.empty()) {
                finite_ = true;
                break;
            }
            int off = total_after();
            offsets_.push_back(off);
            dims_.push_back(static_cast<int>(pivots.size()));
            for (int k : pivots) {
                basis_words_.push_back(decode_word(k, n, d));
                degree_of_.push_back(d);
            }
            std::vector<SparseVec> proj(words);
            for (long long k = 0; k < words; ++k) {
                if (id_of[k] >= 0) {
                    proj[k] = SparseVec::unit(off + id_of[k]);
                } else {
                    std::vector<SparseVec::Entry> e;
                    for (const auto& [id, c] : combos[k]) e.emplace_back(off + id, c);
                    proj[k] = SparseVec::from_sorted(std::move(e));
                }
            }
            projections_.push_back(std::move(proj));
        }
        total_ = total_after();
        const FinGroup& G = V.G();
        for (const auto& w : basis_words_) {
            GroupElt g = G.identity();
            for (int x : w) g = G.mul(g, V.degree(x));
            group_degree_.push_back(g);
        }
        // group action on the basis
        action_.assign(G.order(), std::vector<SparseVec>(total_));
        for (auto s : G.elements()) {
            for (int b = 0; b < total_; ++b) {
                Word w = basis_words_[b];
                CycScalar c(1);
                for (int& x : w) {
                    auto m = V.act(s, x);
                    c *= m.coef;
                    x = m.index;
                }
                action_[s.index][b] = project(w).scaled(c);
            }
        }
        // braided coproduct, degree by degree: D(x r) = sum x r1 (x) r2 + (g_x . r1) (x) x r2
        coproduct_.assign(total_, {});
        coproduct_[0] = SparseVec::unit(0);
        for (int b = 1; b < total_; ++b) {
            const Word& w = basis_words_[b];
            int x = w.front();
            int xb = offsets_[1] + x;
            SparseVec rest = project(Word(w.begin() + 1, w.end()));
            GroupElt gx = V.degree(x);
            Accumulator acc;
            for (const auto& [r, cr] : rest) {
                for (const auto& [k, c] : coproduct_[r]) {
                    int r1 = static_cast<int>(k / total_), r2 = static_cast<int>(k % total_);
                    CycScalar cc = cr * c;
                    for (const auto& [p, cp] : product(xb, r1)) acc.add(p * total_ + r2, cc * cp);
                    SparseVec xr2 = product(xb, r2);
                    for (const auto& [a, ca] : act(gx, r1))
                        for (const auto& [p, cp] : xr2) acc.add(a * total_ + p, cc * ca * cp);
                }
            }
            coproduct_[b] = acc.finish();
        }
    }

    int total_after() const { return static_cast<int>(basis_words_.size()); }

    ModulePtr V_;
    Options opt_;
    bool finite_ = false;
    int total_ = 0;
    std::vector<int> dims_, offsets_, degree_of_;
    std::vector<Word> basis_words_;
    std::vector<GroupElt> group_degree_;
    std::vector<std::vector<SparseVec>> projections_;
    std::vector<std::vector<SparseVec>> action_;
    std::vector<SparseVec> coproduct_;
};

using NicholsPtr = std::shared_ptr<const Nichols>;

inline NicholsPtr build_truncated(const YDModule& V, Nichols::Options opt = {}) {
    return std::make_shared<const Nichols>(std::make_shared<const YDModule>(V), opt);
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// True iff c = -flip; in that case the Hilbert series must be binomial.
inline bool exterior_check(const Nichols& N) {
    if (!N.is_exterior_type()) return false;
    int n = N.module().dim();
    for (int d = 0; d <= N.max_degree(); ++d)
        if (N.dim(d) != binomial(n, d))
            throw StructuralError("braiding is -flip but dim B^" + std::to_string(d) + " is not binomial");
    return true;
}

}  // namespace pointed
