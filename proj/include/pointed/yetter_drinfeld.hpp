#pragma once

// Based Yetter-Drinfeld modules over kG with monomial action
//   s . x_i = chi_i(s) x_{perm(s)(i)},   delta(x_i) = deg(i) (x) x_i,
// and the braiding c(x_i (x) x_j) = deg(i) . x_j (x) x_i.

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pointed/cyclotomic.hpp"
#include "pointed/groups.hpp"
#include "pointed/linalg.hpp"
#include "pointed/racks.hpp"

namespace pointed {

/// One term of a monomial map: coefficient times a basis index.
struct Mono {
    int index;
    CycScalar coef;
};

class YDModule {
public:
    struct Summand {
        enum class Kind { IK, Ell, Rack };
        Kind kind;
        int i = 0, k = 0, ell = 0;  // (i,k) for IK, ell for Ell
        int offset = 0, size = 0;
        std::string name;
    };

    YDModule(GroupPtr G, std::vector<std::string> labels, std::vector<GroupElt> degrees,
             std::vector<std::vector<int>> perm, std::vector<std::vector<CycScalar>> chi,
             std::vector<Summand> summands)
        : group_(std::move(G)),
          labels_(std::move(labels)),
          degrees_(std::move(degrees)),
          perm_(std::move(perm)),
          chi_(std::move(chi)),
          summands_(std::move(summands)) {
        validate();
    }

    const GroupPtr& group() const noexcept { return group_; }
    const FinGroup& G() const noexcept { return *group_; }
    int dim() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    GroupElt degree(int i) const { return degrees_.at(i); }
    const std::vector<Summand>& summands() const noexcept { return summands_; }
    int conductor() const noexcept { return conductor_; }

    /// s . x_i
    Mono act(GroupElt s, int i) const { return {perm_[s.index][i], chi_[s.index][i]}; }
    int perm(GroupElt s, int i) const { return perm_[s.index][i]; }
    const CycScalar& chi(GroupElt s, int i) const { return chi_[s.index][i]; }

    /// c(x_i (x) x_j) = coef * x_first (x) x_i with first = deg(i) |> j.
    Mono braid(int i, int j) const { return act(degrees_[i], j); }

    /// The action of s as a sparse matrix (column j = image of x_j).
    std::vector<SparseVec> action_matrix(GroupElt s) const {
        std::vector<SparseVec> cols(dim());
        for (int j = 0; j < dim(); ++j) {
            auto m = act(s, j);
            cols[j] = SparseVec::unit(m.index, m.coef);
        }
        return cols;
    }

    /// Braiding on V (x) V, basis index i*dim + j; column per input basis tensor.
    std::vector<SparseVec> braiding_matrix() const {
        int n = dim();
        std::vector<SparseVec> cols(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto m = braid(i, j);
                cols[i * n + j] = SparseVec::unit(static_cast<Key>(m.index) * n + i, m.coef);
            }
        return cols;
    }

    /// c^2 = id on V (x) V.
    bool braiding_is_symmetric() const {
        int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto a = braid(i, j);        // a.coef x_{a.index} (x) x_i
                auto b = braid(a.index, i);  // then c(x_{a.index} (x) x_i)
                if (b.index != i || a.index != j || a.coef * b.coef != CycScalar(1)) return false;
            }
        return true;
    }

    /// c = -flip.
    bool braiding_is_minus_flip() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                auto a = braid(i, j);
                if (a.index != j || a.coef != CycScalar(-1)) return false;
            }
        return true;
    }

    /// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on all basis triples.
    bool satisfies_braid_equation() const {
        int n = dim();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    auto [l, lc] = apply_word({0, 1, 0}, {a, b, c});
                    auto [r, rc] = apply_word({1, 0, 1}, {a, b, c});
                    if (l != r || lc != rc) return false;
                }
        return true;
    }

    /// Applies c at the listed positions, rightmost first, to a basis word.
    std::pair<std::vector<int>, CycScalar> apply_word(const std::vector<int>& positions, std::vector<int> word) const {
        CycScalar coef(1);
        for (std::size_t t = positions.size(); t-- > 0;) {
            int p = positions[t];
            auto m = braid(word[p], word[p + 1]);
            int first = m.index;
            word[p + 1] = word[p];
            word[p] = first;
            coef *= m.coef;
        }
        return {word, coef};
    }

private:
    void validate() {
        const FinGroup& G = *group_;
        int n = dim();
        if (static_cast<int>(degrees_.size()) != n || static_cast<int>(perm_.size()) != G.order() ||
            static_cast<int>(chi_.size()) != G.order())
            throw StructuralError("inconsistent Yetter-Drinfeld data sizes");
        conductor_ = 1;
        for (auto s : G.elements()) {
            for (int i = 0; i < n; ++i) {
                if (chi_[s.index][i].is_zero()) throw StructuralError("monomial action with zero coefficient");
                conductor_ = std::lcm(conductor_, chi_[s.index][i].is_rational() ? 1 : chi_[s.index][i].conductor());
            }
        }
        // representation: (s t) . x = s . (t . x)
        for (auto s : G.elements())
            for (auto t : G.elements())
                for (int i = 0; i < n; ++i) {
                    auto ti = act(t, i);
                    auto sti = act(s, ti.index);
                    auto st = act(G.mul(s, t), i);
                    if (st.index != sti.index || st.coef != ti.coef * sti.coef)
                        throw StructuralError("action is not a representation at s=" + G.label(s) + ", t=" + G.label(t));
                }
        // Yetter-Drinfeld compatibility: deg(s . x_i) = s deg(i) s^-1
        for (auto s : G.elements())
            for (int i = 0; i < n; ++i)
                if (degrees_[perm_[s.index][i]] != G.conj(s, degrees_[i]))
                    throw StructuralError("Yetter-Drinfeld compatibility fails at s=" + G.label(s) + ", x=" + labels_[i]);
        auto e = G.identity();
        for (int i = 0; i < n; ++i)
            if (perm_[e.index][i] != i || !chi_[e.index][i].is_one())
                throw StructuralError("identity does not act trivially");
    }

    GroupPtr group_;
    std::vector<std::string> labels_;
    std::vector<GroupElt> degrees_;
    std::vector<std::vector<int>> perm_;
    std::vector<std::vector<CycScalar>> chi_;
    std::vector<Summand> summands_;
    int conductor_ = 1;
};

using ModulePtr = std::shared_ptr<const YDModule>;

namespace detail {

// Fills perm/chi for all of D_m from the actions of g and h (as monomial maps on a 2-dim block).
inline void dihedral_block_action(const FinGroup& G, int offset, const CycScalar& h1, const CycScalar& h2,
                                  std::vector<std::vector<int>>& perm, std::vector<std::vector<CycScalar>>& chi) {
    for (auto x : G.elements()) {
        auto [a, b] = G.dihedral_parts(x);
        // g^a h^b: h^b scales, then g^a swaps
        CycScalar c1 = CycScalar(1), c2 = CycScalar(1);
        for (int t = 0; t < b; ++t) {
            c1 *= h1;
            c2 *= h2;
        }
        perm[x.index][offset] = offset + (a ? 1 : 0);
        perm[x.index][offset + 1] = offset + (a ? 0 : 1);
        chi[x.index][offset] = c1;
        chi[x.index][offset + 1] = c2;
    }
}

}  // namespace detail

/// M_l: g swaps x1, x2; h acts by diag(w^l, w^-l); both vectors have degree h^n.
inline YDModule module_M_ell(const GroupPtr& G, int ell) {
    if (G->kind() != FinGroup::Kind::Dihedral) throw ValidationError("wrong_group", "M_l needs a dihedral group");
    int m = G->parameter();
    if (m % 2 != 0) throw ValidationError("bad_module", "M_l needs even m");
    int n = m / 2;
    if (ell % 2 == 0 || ell < 1 || ell >= n)
        throw ValidationError("not_in_L", "l = " + std::to_string(ell) + " must be odd with 1 <= l < n = " + std::to_string(n));
    std::vector<std::vector<int>> perm(G->order(), std::vector<int>(2));
    std::vector<std::vector<CycScalar>> chi(G->order(), std::vector<CycScalar>(2));
    detail::dihedral_block_action(*G, 0, root_of_unity(m, ell), root_of_unity(m, -ell), perm, chi);
    std::string s = std::to_string(ell);
    YDModule::Summand sm{YDModule::Summand::Kind::Ell, 0, 0, ell, 0, 2, "M_" + s};
    return YDModule(G, {"x1(" + s + ")", "x2(" + s + ")"}, {G->dihedral(0, n), G->dihedral(0, n)}, perm, chi, {sm});
}

/// M_(i,k): g swaps y1, y2; h acts by diag(w^k, w^-k); degrees h^i and h^-i.
inline YDModule module_M_ik(const GroupPtr& G, int i, int k) {
    if (G->kind() != FinGroup::Kind::Dihedral) throw ValidationError("wrong_group", "M_(i,k) needs a dihedral group");
    int m = G->parameter();
    if (m % 2 != 0) throw ValidationError("bad_module", "M_(i,k) needs even m");
    int n = m / 2;
    if (i < 1 || i >= n) throw ValidationError("bad_module", "i must satisfy 1 <= i < n");
    if (k < 0 || k >= m) throw ValidationError("bad_module", "k must satisfy 0 <= k < m");
    std::vector<std::vector<int>> perm(G->order(), std::vector<int>(2));
    std::vector<std::vector<CycScalar>> chi(G->order(), std::vector<CycScalar>(2));
    detail::dihedral_block_action(*G, 0, root_of_unity(m, k), root_of_unity(m, -k), perm, chi);
    std::string s = std::to_string(i) + "," + std::to_string(k);
    YDModule::Summand sm{YDModule::Summand::Kind::IK, i, k, 0, 0, 2, "M_(" + s + ")"};
    return YDModule(G, {"y1(" + s + ")", "y2(" + s + ")"}, {G->dihedral(0, i), G->dihedral(0, -i)}, perm, chi, {sm});
}

/// Block-diagonal sum; summands keep their order.
inline YDModule direct_sum(const std::vector<YDModule>& parts) {
    if (parts.empty()) throw ValidationError("bad_module", "direct sum of nothing");
    GroupPtr G = parts.front().group();
    std::vector<std::string> labels;
    std::vector<GroupElt> degrees;
    std::vector<YDModule::Summand> summands;
    int total = 0;
    for (const auto& p : parts) {
        if (p.group() != G && p.G().table() != G->table())
            throw ValidationError("group_mismatch", "direct sum of modules over different groups");
        total += p.dim();
    }
    std::vector<std::vector<int>> perm(G->order(), std::vector<int>(total));
    std::vector<std::vector<CycScalar>> chi(G->order(), std::vector<CycScalar>(total));
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.dim(); ++i) {
            labels.push_back(p.label(i));
            degrees.push_back(p.degree(i));
            for (auto s : G->elements()) {
                auto mm = p.act(s, i);
                perm[s.index][off + i] = off + mm.index;
                chi[s.index][off + i] = mm.coef;
            }
        }
        for (auto sm : p.summands()) {
            sm.offset += off;
            summands.push_back(sm);
        }
        off += p.dim();
    }
    return YDModule(G, labels, degrees, perm, chi, summands);
}

/// kX over S_n: delta(x_t) = t (x) x_t, s . x_t = chi_t(s) x_{s |> t}.
inline YDModule rack_module(const RackCocycle& rc) {
    OneCocycle chi1 = one_cocycle_extension(rc);
    const Rack& X = rc.rack;
    const GroupPtr& G = X.group;
    int n = X.size();
    std::vector<std::vector<int>> perm(G->order(), std::vector<int>(n));
    std::vector<std::vector<CycScalar>> chi(G->order(), std::vector<CycScalar>(n));
    for (auto s : G->elements())
        for (int t = 0; t < n; ++t) {
            perm[s.index][t] = X.index_of(G->conj(s, X.elements[t]));
            chi[s.index][t] = chi1(t, s);
        }
    std::vector<std::string> labels;
    for (const auto& l : X.labels) labels.push_back("x" + l);
    YDModule::Summand sm{YDModule::Summand::Kind::Rack, 0, 0, 0, 0, n, "k(X," + rc.name() + ")"};
    return YDModule(G, labels, X.elements, perm, chi, {sm});
}

// ---------------------------------------------------------------------------
// Dihedral index data: the sets J, I (sequences in J), L and K.

struct DihedralIndexData {
    int m = 0;
    std::vector<std::pair<int, int>> I;
    std::vector<int> L;
};

inline bool omega_power_is(int m, long long e, int target) {
    long long r = ((e % m) + m) % m;
    if (target == 1) return r == 0;
    if (target == -1) return m % 2 == 0 && r == m / 2;
    return false;
}

/// (i,k) in J: 1 <= i < n, 1 <= k < m, w^{ik} = -1.
inline bool in_J(int m, int i, int k) {
    int n = m / 2;
    return m % 2 == 0 && i >= 1 && i < n && k >= 1 && k < m && omega_power_is(m, static_cast<long long>(i) * k, -1);
}

/// Throws a ValidationError naming the first violated membership condition.
inline void validate_index_data(const DihedralIndexData& d) {
    int m = d.m;
    if (m < 4 || m % 2 != 0) throw ValidationError("bad_m", "m must be even and >= 4");
    if (d.I.empty() && d.L.empty()) throw ValidationError("empty_data", "I and L are both empty");
    int n = m / 2;
    for (auto [i, k] : d.I) {
        if (!in_J(m, i, k))
            throw ValidationError("not_in_J", "(" + std::to_string(i) + "," + std::to_string(k) +
                                                  ") is not in J: need 1 <= i < n, 1 <= k < m and w^{ik} = -1");
    }
    for (auto [is, ks] : d.I)
        for (auto [it, kt] : d.I)
            if (!omega_power_is(m, static_cast<long long>(is) * kt + static_cast<long long>(it) * ks, 1))
                throw ValidationError("not_in_I", "pairs (" + std::to_string(is) + "," + std::to_string(ks) + ") and (" +
                                                      std::to_string(it) + "," + std::to_string(kt) +
                                                      ") violate w^{i_s k_t + i_t k_s} = 1");
    for (int l : d.L)
        if (l % 2 == 0 || l < 1 || l >= n)
            throw ValidationError("not_in_L", "l = " + std::to_string(l) + " must be odd with 1 <= l < n");
    if (!d.I.empty() && !d.L.empty()) {
        for (auto [i, k] : d.I) {
            if (k % 2 == 0) throw ValidationError("not_in_K", "k = " + std::to_string(k) + " must be odd when L is nonempty");
            for (int l : d.L)
                if (!omega_power_is(m, static_cast<long long>(i) * l, -1))
                    throw ValidationError("not_in_K", "w^{i l} = -1 fails for i = " + std::to_string(i) +
                                                          ", l = " + std::to_string(l));
        }
    }
}

/// M_I, M_L or M_{I,L}: the I summands first, then the L summands.
inline YDModule dihedral_module(const GroupPtr& G, const DihedralIndexData& d) {
    validate_index_data(d);
    if (G->kind() != FinGroup::Kind::Dihedral || G->parameter() != d.m)
        throw ValidationError("wrong_group", "index data conductor does not match the group");
    std::vector<YDModule> parts;
    for (auto [i, k] : d.I) parts.push_back(module_M_ik(G, i, k));
    for (int l : d.L) parts.push_back(module_M_ell(G, l));
    return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

/// All of J for a given m.
inline std::vector<std::pair<int, int>> scan_J(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < m / 2; ++i)
        for (int k = 1; k < m; ++k)
            if (in_J(m, i, k)) out.emplace_back(i, k);
    return out;
}

}  // namespace pointed
