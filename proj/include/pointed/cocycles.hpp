#pragma once

// Bilinear forms on V, functionals on A (x) A, convolution, the exponential and the
// identity checks around them.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

#include "pointed/bosonization.hpp"
#include "pointed/hopf.hpp"

namespace pointed {

using HopfPtr = std::shared_ptr<const HopfStructure>;

// ---------------------------------------------------------------------------
// Forms eta : V (x) V -> k

class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(ModulePtr V) : V_(std::move(V)), m_(V_->dim(), std::vector<Scalar>(V_->dim())) {}

    const YDModule& module() const { return *V_; }
    const ModulePtr& module_ptr() const { return V_; }
    int dim() const { return V_->dim(); }
    const Scalar& operator()(int i, int j) const { return m_[i][j]; }
    void set(int i, int j, Scalar v) { m_[i][j] = std::move(v); }
    bool is_zero() const {
        for (const auto& row : m_)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

    friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) {
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) a.m_[i][j] += b.m_[i][j];
        return a;
    }
    BilinearForm scaled(const Scalar& c) const {
        BilinearForm r = *this;
        for (auto& row : r.m_)
            for (auto& x : row) x *= c;
        return r;
    }

    /// eta^s(x_i, x_j) = eta(s . x_i, s . x_j)
    Scalar twisted(GroupElt s, int i, int j) const {
        auto a = V_->act(s, i), b = V_->act(s, j);
        return a.coef * b.coef * m_[a.index][b.index];
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (!m_[i][j].is_zero())
                    out += (out.empty() ? "" : " + ") + ("(" + m_[i][j].to_string() + ")d[" + V_->label(i) + "]d[" +
                                                        V_->label(j) + "]");
        return out.empty() ? "0" : out;
    }

private:
    ModulePtr V_;
    std::vector<std::vector<Scalar>> m_;
};

/// eta^s = eta for the generators of G (all of G when full_group is set).
inline AxiomResult check_invariance(const BilinearForm& eta, bool full_group = false) {
    AxiomResult r;
    r.name = "invariance";
    const FinGroup& G = eta.module().G();
    std::vector<GroupElt> gens = full_group ? G.elements() : G.generators();
    for (auto s : gens)
        for (int i = 0; i < eta.dim(); ++i)
            for (int j = 0; j < eta.dim(); ++j) {
                ++r.checked;
                Scalar t = eta.twisted(s, i, j);
                if (t != eta(i, j) && r.pass) {
                    r.pass = false;
                    r.witness = Witness{{s.index, i, j}, t.to_string(), eta(i, j).to_string()};
                }
            }
    return r;
}

/// Basis of the invariant forms: the joint fixed space of the generators.
inline std::vector<BilinearForm> invariant_basis(const ModulePtr& V) {
    int n = V->dim();
    const FinGroup& G = V->G();
    // column (i,j) holds the coefficients of d_i (x) d_j in eta^s - eta, stacked over generators
    std::vector<SparseVec> cols(n * n);
    Key block = static_cast<Key>(n) * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Accumulator acc;
            for (std::size_t t = 0; t < G.generators().size(); ++t) {
                GroupElt s = G.generators()[t];
                // eta^s(x_k, x_l) picks up m[i][j] when s.x_k ~ x_i and s.x_l ~ x_j
                for (int k = 0; k < n; ++k) {
                    auto a = V->act(s, k);
                    if (a.index != i) continue;
                    for (int l = 0; l < n; ++l) {
                        auto b = V->act(s, l);
                        if (b.index != j) continue;
                        acc.add(static_cast<Key>(t) * block + k * n + l, a.coef * b.coef);
                    }
                }
                acc.add(static_cast<Key>(t) * block + i * n + j, Scalar(-1));
            }
            cols[i * n + j] = acc.finish();
        }
    std::vector<BilinearForm> out;
    for (const auto& v : nullspace(cols)) {
        BilinearForm f(V);
        for (const auto& [k, c] : v) f.set(static_cast<int>(k / n), static_cast<int>(k % n), c);
        out.push_back(std::move(f));
    }
    return out;
}

/// Orbits of G on basis pairs (i, j) under s.(i, j) = (s|>i, s|>j), ignoring scalars.
inline std::vector<std::vector<std::pair<int, int>>> pair_orbits(const YDModule& V) {
    int n = V.dim();
    std::vector<int> seen(n * n, 0);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (seen[i * n + j]) continue;
            std::set<std::pair<int, int>> orb;
            for (auto s : V.G().elements()) orb.emplace(V.perm(s, i), V.perm(s, j));
            for (auto [a, b] : orb) seen[a * n + b] = 1;
            out.emplace_back(orb.begin(), orb.end());
        }
    return out;
}

// ---------------------------------------------------------------------------
// The conditions (eta (x) eta) c_pi on V^{(x) 4}

namespace detail {

inline Scalar eta_eta_after(const BilinearForm& eta, const std::vector<int>& positions, const Word& w) {
    auto [u, c] = eta.module().apply_word(positions, w);
    if (c.is_zero()) return {};
    return c * eta(u[0], u[1]) * eta(u[2], u[3]);
}

inline AxiomResult compare_braid_composites(const BilinearForm& eta, const std::string& name,
                                            const std::vector<int>& lhs, const std::vector<int>& rhs) {
    AxiomResult r;
    r.name = name;
    int n = eta.dim();
    Word w(4);
    for (w[0] = 0; w[0] < n; ++w[0])
        for (w[1] = 0; w[1] < n; ++w[1])
            for (w[2] = 0; w[2] < n; ++w[2])
                for (w[3] = 0; w[3] < n; ++w[3]) {
                    ++r.checked;
                    Scalar L = eta_eta_after(eta, lhs, w), R = eta_eta_after(eta, rhs, w);
                    if (L != R && r.pass) {
                        r.pass = false;
                        r.witness = Witness{w, L.to_string(), R.to_string()};
                    }
                }
    return r;
}

}  // namespace detail

// Composites as braid positions, rightmost acting first (position p acts on letters p, p+1).
inline const std::vector<int> kC1324{1};
inline const std::vector<int> kC2413{1, 0, 2};
inline const std::vector<int> kC1423{1, 2};
inline const std::vector<int> kC2314{1, 0};

struct Eq12Report {
    AxiomResult eq1, eq2;
    bool pass() const { return eq1.pass && eq2.pass; }
};

/// (eta (x) eta) c_1324 = (eta (x) eta) c_2413 and (eta (x) eta) c_1423 = (eta (x) eta) c_2314.
inline Eq12Report check_eq1_eq2(const BilinearForm& eta) {
    return {detail::compare_braid_composites(eta, "eq1", kC1324, kC2413),
            detail::compare_braid_composites(eta, "eq2", kC1423, kC2314)};
}

// ---------------------------------------------------------------------------
// Functionals on A (x) A

struct Support {
    enum class Kind { Any, Bidegree, Diagonal };
    Kind kind = Kind::Any;
    int p = 0, q = 0;
    static Support any() { return {}; }
    static Support bidegree(int p, int q) { return {Kind::Bidegree, p, q}; }
    static Support diagonal() { return {Kind::Diagonal, 0, 0}; }
    bool allows(int da, int db) const {
        switch (kind) {
            case Kind::Bidegree: return da == p && db == q;
            case Kind::Diagonal: return da == db;
            default: return true;
        }
    }
    bool is_diagonal() const { return kind == Kind::Diagonal || (kind == Kind::Bidegree && p == q); }
};

class PairFunctional {
public:
    using Eval = std::function<Scalar(int, int)>;

    PairFunctional(HopfPtr A, Eval f, Support s = Support::any())
        : p_(std::make_shared<Impl>(std::move(A), std::move(f), s)) {}

    const HopfStructure& algebra() const { return *p_->A; }
    const HopfPtr& algebra_ptr() const { return p_->A; }
    const Support& support() const { return p_->support; }

    Scalar operator()(int a, int b) const {
        const HopfStructure& A = *p_->A;
        if (!p_->support.allows(A.degree(a), A.degree(b))) return {};
        return p_->get(a, b);
    }

    Scalar on(const SparseVec& x, const SparseVec& y) const {
        Scalar s;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) {
                Scalar v = (*this)(static_cast<int>(a), static_cast<int>(b));
                if (!v.is_zero()) s += ca * cb * v;
            }
        return s;
    }

    /// Evaluates every pair once so later sweeps are lookups.
    void tabulate() const {
        int n = p_->A->dim();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) (*this)(a, b);
    }

    bool is_zero() const {
        int n = p_->A->dim();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!(*this)(a, b).is_zero()) return false;
        return true;
    }

private:
    struct Impl {
        HopfPtr A;
        Eval f;
        Support support;
        bool dense;
        std::mutex mu;
        std::vector<Scalar> table;
        std::vector<char> known;
        std::unordered_map<Key, Scalar> memo;

        Impl(HopfPtr a, Eval fn, Support s) : A(std::move(a)), f(std::move(fn)), support(s) {
            dense = A->dim() <= 2048;
            if (dense) {
                table.resize(static_cast<std::size_t>(A->dim()) * A->dim());
                known.assign(table.size(), 0);
            }
        }
        Scalar get(int a, int b) {
            Key k = static_cast<Key>(a) * A->dim() + b;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (dense) {
                    if (known[k]) return table[k];
                } else if (auto it = memo.find(k); it != memo.end()) {
                    return it->second;
                }
            }
            Scalar v = f(a, b);
            std::lock_guard<std::mutex> lock(mu);
            if (dense) {
                table[k] = v;
                known[k] = 1;
            } else {
                memo.emplace(k, v);
            }
            return v;
        }
    };
    std::shared_ptr<Impl> p_;
};

/// eps (x) eps
inline PairFunctional counit_pair(const HopfPtr& A) {
    const HopfStructure* H = A.get();
    return PairFunctional(A, [H](int a, int b) { return H->counit(a) * H->counit(b); }, Support::bidegree(0, 0));
}

/// Any table, e.g. for harness tests.
inline PairFunctional table_functional(const HopfPtr& A, std::map<std::pair<int, int>, Scalar> entries) {
    auto t = std::make_shared<std::map<std::pair<int, int>, Scalar>>(std::move(entries));
    return PairFunctional(A, [t](int a, int b) {
        auto it = t->find({a, b});
        return it == t->end() ? Scalar() : it->second;
    });
}

inline PairFunctional scale(const PairFunctional& f, const Scalar& c) {
    return PairFunctional(f.algebra_ptr(), [f, c](int a, int b) { return c * f(a, b); }, f.support());
}

inline PairFunctional add(const PairFunctional& f, const PairFunctional& g) {
    Support s = Support::any();
    if (f.support().is_diagonal() && g.support().is_diagonal()) s = Support::diagonal();
    return PairFunctional(f.algebra_ptr(), [f, g](int a, int b) { return f(a, b) + g(a, b); }, s);
}

/// (f * g)(a, b) = sum f(a1, b1) g(a2, b2)
inline PairFunctional convolve(const PairFunctional& f, const PairFunctional& g) {
    const Support &sf = f.support(), &sg = g.support();
    Support s = Support::any();
    if (sf.kind == Support::Kind::Bidegree && sg.kind == Support::Kind::Bidegree) {
        s = Support::bidegree(sf.p + sg.p, sf.q + sg.q);
    } else if (sf.is_diagonal() && sg.is_diagonal()) {
        s = Support::diagonal();
    }
    const HopfStructure* H = &f.algebra();
    return PairFunctional(
        f.algebra_ptr(),
        [f, g, H](int a, int b) {
            Key n = H->dim();
            Scalar sum;
            const SparseVec& da = H->coproduct(a);
            const SparseVec& db = H->coproduct(b);
            for (const auto& [ka, ca] : da) {
                int a1 = static_cast<int>(ka / n), a2 = static_cast<int>(ka % n);
                for (const auto& [kb, cb] : db) {
                    int b1 = static_cast<int>(kb / n), b2 = static_cast<int>(kb % n);
                    if (!f.support().allows(H->degree(a1), H->degree(b1))) continue;
                    if (!g.support().allows(H->degree(a2), H->degree(b2))) continue;
                    Scalar x = f(a1, b1);
                    if (x.is_zero()) continue;
                    Scalar y = g(a2, b2);
                    if (!y.is_zero()) sum += ca * cb * x * y;
                }
            }
            return sum;
        },
        s);
}

/// The functional on A (x) A induced by eta: eta~(x#h, y#h') = eta(x, h.y) eps(h')
/// on A_1 (x) A_1, zero elsewhere. Since eps(h') = 1 for every group-like, h' plays no role.
inline PairFunctional lift_functional(const BilinearForm& eta, const BosonPtr& A) {
    if (eta.module_ptr() != A->nichols().module_ptr() && eta.module().labels() != A->module().labels())
        throw ValidationError("module_mismatch", "the form and the algebra use different modules");
    const BosonHopf* H = A.get();
    auto form = std::make_shared<BilinearForm>(eta);
    return PairFunctional(
        A,
        [H, form](int a, int b) {
            const Nichols& N = H->nichols();
            int x = N.word(H->nichols_part(a))[0];
            int y = N.word(H->nichols_part(b))[0];
            auto hy = H->module().act(H->group_part(a), y);
            return hy.coef * (*form)(x, hy.index);
        },
        Support::bidegree(1, 1));
}

/// eta~ vanishes on A_0 (x) A + A (x) A_0.
inline AxiomResult check_vanishing_on_coradical(const PairFunctional& f) {
    AxiomResult r;
    r.name = "vanishing_on_A0";
    const HopfStructure& A = f.algebra();
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b) {
            if (A.degree(a) != 0 && A.degree(b) != 0) continue;
            ++r.checked;
            Scalar v = f(a, b);
            if (!v.is_zero() && r.pass) {
                r.pass = false;
                r.witness = Witness{{a, b}, v.to_string(), "0"};
            }
        }
    return r;
}

/// e^f = sum_k f^{*k} / k!, for f vanishing on A_0 (x) A + A (x) A_0. At (a, b) only
/// k <= min(deg a, deg b) contribute; a term count above top degree + 1 is an error.
inline PairFunctional exponential(const PairFunctional& f) {
    auto van = check_vanishing_on_coradical(f);
    if (!van.pass) throw StructuralError("exponential needs a functional vanishing on A_0 (x) A + A (x) A_0");
    const HopfStructure* H = &f.algebra();
    int top = H->top_degree();
    auto powers = std::make_shared<std::vector<PairFunctional>>();
    powers->push_back(counit_pair(f.algebra_ptr()));
    for (int k = 1; k <= top; ++k) powers->push_back(convolve(powers->back(), f));
    Support s = f.support().is_diagonal() ? Support::diagonal() : Support::any();
    return PairFunctional(
        f.algebra_ptr(),
        [powers, H, top](int a, int b) {
            int K = std::min(H->degree(a), H->degree(b));
            if (K > top + 1) throw StructuralError("exponential series did not terminate");
            Scalar sum, fact(1);
            for (int k = 0; k <= K && k < static_cast<int>(powers->size()); ++k) {
                if (k > 0) fact *= Scalar(k);
                Scalar v = (*powers)[k](a, b);
                if (!v.is_zero()) sum += v / fact;
            }
            return sum;
        },
        s);
}

// ---------------------------------------------------------------------------
// Identity checks

/// eps(a) f(b,c) + f(a,bc) = f(a,b) eps(c) + f(ab,c) on all in-cap triples.
inline AxiomResult check_hochschild(const PairFunctional& f) {
    AxiomResult r;
    r.name = "hochschild";
    const HopfStructure& A = f.algebra();
    int n = A.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!A.product_defined(a, b)) continue;
            const SparseVec& ab = A.product(a, b);
            for (int c = 0; c < n; ++c) {
                if (!A.product_defined(b, c) || (A.capped() && A.degree(a) + A.degree(b) + A.degree(c) > A.cap()))
                    continue;
                ++r.checked;
                Scalar L = A.counit(a) * f(b, c) + f.on(SparseVec::unit(a), A.product(b, c));
                Scalar R = f(a, b) * A.counit(c) + f.on(ab, SparseVec::unit(c));
                if (L != R) {
                    r.pass = false;
                    r.witness = Witness{{a, b, c}, L.to_string(), R.to_string()};
                    return r;
                }
            }
        }
    return r;
}

struct CocycleReport {
    AxiomResult normalization, cocycle;
    std::optional<AxiomResult> inverse_formula;  // sigma^-1(a,b) = sigma(S(a),b), informational
    bool pass() const { return normalization.pass && cocycle.pass; }
};

/// Restricts triple sweeps to pure Nichols elements r # 1 (and to degree patterns).
struct TripleDomain {
    bool nichols_only = false;
    int max_total_degree = -1;  // -1: no bound beyond the cap
};

namespace detail {

inline std::vector<int> domain_elements(const HopfStructure& A, const TripleDomain& dom, const BosonHopf* boson) {
    std::vector<int> out;
    for (int a = 0; a < A.dim(); ++a) {
        if (dom.nichols_only && boson && boson->group_part(a) != boson->group().identity()) continue;
        out.push_back(a);
    }
    return out;
}

}  // namespace detail

/// sigma(b1,c1) sigma(a, b2c2) = sigma(a1,b1) sigma(a2b2, c), plus sigma(a,1) = eps(a) = sigma(1,a).
inline CocycleReport check_multiplicative_cocycle(const PairFunctional& sigma, const PairFunctional* sigma_inv = nullptr,
                                                  TripleDomain dom = {}) {
    const HopfStructure& A = sigma.algebra();
    const BosonHopf* boson = dynamic_cast<const BosonHopf*>(&A);
    int n = A.dim();
    Key nn = n;
    CocycleReport rep;
    rep.normalization.name = "normalization";
    for (int a = 0; a < n; ++a) {
        ++rep.normalization.checked;
        Scalar x = sigma(a, A.unit()), y = sigma(A.unit(), a);
        if ((x != A.counit(a) || y != A.counit(a)) && rep.normalization.pass) {
            rep.normalization.pass = false;
            rep.normalization.witness = Witness{{a}, x.to_string() + ", " + y.to_string(), A.counit(a).to_string()};
        }
    }
    // W(b,c) = sum sigma(b1,c1) b2c2, kept per in-cap pair
    auto pair_sum = [&](int b, int c) {
        Accumulator acc;
        for (const auto& [kb, cb] : A.coproduct(b))
            for (const auto& [kc, cc] : A.coproduct(c)) {
                Scalar s = sigma(static_cast<int>(kb / nn), static_cast<int>(kc / nn));
                if (s.is_zero()) continue;
                acc.add(A.product(static_cast<int>(kb % nn), static_cast<int>(kc % nn)), s * cb * cc);
            }
        return acc.finish();
    };
    auto elems = detail::domain_elements(A, dom, boson);
    std::unordered_map<Key, SparseVec> W;
    for (int b : elems)
        for (int c : elems)
            if (A.product_defined(b, c)) W.emplace(static_cast<Key>(b) * n + c, pair_sum(b, c));
    rep.cocycle.name = "multiplicative_cocycle";
    for (int a : elems)
        for (int b : elems) {
            if (!A.product_defined(a, b)) continue;
            const SparseVec& U = W.at(static_cast<Key>(a) * n + b);
            for (int c : elems) {
                if (!A.product_defined(b, c)) continue;
                int total = A.degree(a) + A.degree(b) + A.degree(c);
                if (A.capped() && total > A.cap()) continue;
                if (dom.max_total_degree >= 0 && total > dom.max_total_degree) continue;
                ++rep.cocycle.checked;
                Scalar L = sigma.on(SparseVec::unit(a), W.at(static_cast<Key>(b) * n + c));
                Scalar R = sigma.on(U, SparseVec::unit(c));
                if (L != R) {
                    rep.cocycle.pass = false;
                    rep.cocycle.witness = Witness{{a, b, c}, L.to_string(), R.to_string()};
                    goto done;
                }
            }
        }
done:
    if (sigma_inv && !A.capped()) {
        AxiomResult inv;
        inv.name = "inverse_via_antipode";
        for (int a = 0; a < n && inv.pass; ++a)
            for (int b = 0; b < n; ++b) {
                ++inv.checked;
                Scalar L = (*sigma_inv)(a, b), R = sigma.on(A.antipode(a), SparseVec::unit(b));
                if (L != R) {
                    inv.pass = false;
                    inv.witness = Witness{{a, b}, L.to_string(), R.to_string()};
                    break;
                }
            }
        rep.inverse_formula = inv;
    }
    return rep;
}

/// f * g = eps (x) eps on all pairs.
inline AxiomResult check_convolution_inverse(const PairFunctional& f, const PairFunctional& g) {
    AxiomResult r;
    r.name = "convolution_inverse";
    auto fg = convolve(f, g);
    const HopfStructure& A = f.algebra();
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b) {
            ++r.checked;
            Scalar v = fg(a, b), e = A.counit(a) * A.counit(b);
            if (v != e) {
                r.pass = false;
                r.witness = Witness{{a, b}, v.to_string(), e.to_string()};
                return r;
            }
        }
    return r;
}

struct CommutingReport {
    AxiomResult b, c;
    bool pass() const { return b.pass && c.pass; }
};

/// (b): (eps (x) f) * f(id (x) m) = f(id (x) m) * (eps (x) f), i.e. f(a, W - W') = 0 with
///      W = sum f(b1,c1) b2c2 and W' = sum b1c1 f(b2,c2);
/// (c): (f (x) eps) * f(m (x) id) = f(m (x) id) * (f (x) eps), i.e. f(U - U', c) = 0.
inline CommutingReport check_commuting_conditions(const PairFunctional& f, TripleDomain dom = {}) {
    const HopfStructure& A = f.algebra();
    const BosonHopf* boson = dynamic_cast<const BosonHopf*>(&A);
    int n = A.dim();
    Key nn = n;
    auto elems = detail::domain_elements(A, dom, boson);
    // D(b,c) = sum f(b1,c1) b2c2 - sum b1c1 f(b2,c2); products with zero weight are skipped
    auto diff = [&](int b, int c) {
        Accumulator acc;
        for (const auto& [kb, cb] : A.coproduct(b))
            for (const auto& [kc, cc] : A.coproduct(c)) {
                int b1 = static_cast<int>(kb / nn), b2 = static_cast<int>(kb % nn);
                int c1 = static_cast<int>(kc / nn), c2 = static_cast<int>(kc % nn);
                Scalar x = f(b1, c1);
                if (!x.is_zero()) acc.add(A.product(b2, c2), x * cb * cc);
                Scalar y = f(b2, c2);
                if (!y.is_zero()) acc.add(A.product(b1, c1), -(y * cb * cc));
            }
        return acc.finish();
    };
    auto in_scope = [&](int a, int b, int c) {
        int total = A.degree(a) + A.degree(b) + A.degree(c);
        if (dom.max_total_degree >= 0 && total > dom.max_total_degree) return false;
        return true;
    };
    CommutingReport rep;
    rep.b.name = "commuting_b";
    rep.c.name = "commuting_c";
    for (int b : elems)
        for (int c : elems) {
            // b2c2 only gets multiplied where f(b1,c1) != 0, which keeps its degree below deg b + deg c
            SparseVec D;
            bool computed = false;
            for (int a : elems) {
                if (!in_scope(a, b, c)) continue;
                ++rep.b.checked;
                if (A.degree(a) != 1 || A.degree(b) + A.degree(c) < 2) continue;  // f(a, .) needs deg a = 1
                if (!computed) {
                    D = diff(b, c);
                    computed = true;
                }
                Scalar v = f.on(SparseVec::unit(a), D);
                if (!v.is_zero() && rep.b.pass) {
                    rep.b.pass = false;
                    rep.b.witness = Witness{{a, b, c}, v.to_string(), "0"};
                }
            }
        }
    for (int a : elems)
        for (int b : elems) {
            SparseVec D;
            bool computed = false;
            for (int c : elems) {
                if (!in_scope(a, b, c)) continue;
                ++rep.c.checked;
                if (A.degree(c) != 1 || A.degree(a) + A.degree(b) < 2) continue;
                if (!computed) {
                    D = diff(a, b);
                    computed = true;
                }
                Scalar v = f.on(D, SparseVec::unit(c));
                if (!v.is_zero() && rep.c.pass) {
                    rep.c.pass = false;
                    rep.c.witness = Witness{{a, b, c}, v.to_string(), "0"};
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Dihedral coefficient families on M_{I,L}: summands of M_I come first, then M_L.

class DihedralForm {
public:
    explicit DihedralForm(ModulePtr V) : DihedralForm(BilinearForm(std::move(V))) {}
    /// Coefficient view of an existing form.
    explicit DihedralForm(BilinearForm f) : form_(std::move(f)) {
        for (const auto& s : form_.module().summands()) {
            if (s.kind == YDModule::Summand::Kind::IK) I_.push_back(s);
            if (s.kind == YDModule::Summand::Kind::Ell) L_.push_back(s);
        }
    }
    int m() const { return form_.module().G().parameter(); }
    const std::vector<YDModule::Summand>& I() const { return I_; }
    const std::vector<YDModule::Summand>& L() const { return L_; }

    // r, s in {1, 2}; summand positions index into I() / L().
    void alpha(int pq, int r, int ik, int s, Scalar v) { form_.set(y(pq, r), y(ik, s), std::move(v)); }
    void beta(int pq, int r, int l, int s, Scalar v) { form_.set(y(pq, r), x(l, s), std::move(v)); }
    /// coefficient of d_s^(l) (x) d_r^(p,q)
    void zeta(int pq, int r, int l, int s, Scalar v) { form_.set(x(l, s), y(pq, r), std::move(v)); }
    void xi(int l, int r, int l2, int s, Scalar v) { form_.set(x(l, r), x(l2, s), std::move(v)); }

    Scalar alpha(int pq, int r, int ik, int s) const { return form_(y(pq, r), y(ik, s)); }
    Scalar beta(int pq, int r, int l, int s) const { return form_(y(pq, r), x(l, s)); }
    Scalar zeta(int pq, int r, int l, int s) const { return form_(x(l, s), y(pq, r)); }
    Scalar xi(int l, int r, int l2, int s) const { return form_(x(l, r), x(l2, s)); }

    int y(int pq, int r) const { return I_.at(pq).offset + r - 1; }
    int x(int l, int s) const { return L_.at(l).offset + s - 1; }

    const BilinearForm& form() const { return form_; }

private:
    BilinearForm form_;
    std::vector<YDModule::Summand> I_, L_;
};

/// The closed invariance conditions for dihedral coefficient families: the swap
/// symmetry from g, and the congruences from h (d^(p,q)_1 carries w^q, d^(p,q)_2 carries
/// w^-q, d^(l)_1 carries w^l). Returns the names of violated conditions.
inline std::vector<std::string> dihedral_closed_conditions(const DihedralForm& f) {
    std::vector<std::string> bad;
    int m = f.m();
    auto mod = [m](long long v) { return ((v % m) + m) % m; };
    const auto &I = f.I(), &L = f.L();
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b) {
            int q = I[a].k, k = I[b].k;
            std::string tag = "(" + std::to_string(I[a].i) + "," + std::to_string(q) + ";" + std::to_string(I[b].i) +
                              "," + std::to_string(k) + ")";
            if (f.alpha(a, 1, b, 2) != f.alpha(a, 2, b, 1)) bad.push_back("alpha^{12}=alpha^{21} " + tag);
            if (f.alpha(a, 1, b, 1) != f.alpha(a, 2, b, 2)) bad.push_back("alpha^{11}=alpha^{22} " + tag);
            if (mod(q + k) != 0 && (!f.alpha(a, 1, b, 1).is_zero() || !f.alpha(a, 2, b, 2).is_zero()))
                bad.push_back("alpha^{rr} needs q = m-k " + tag);
            if (mod(q - k) != 0 && (!f.alpha(a, 1, b, 2).is_zero() || !f.alpha(a, 2, b, 1).is_zero()))
                bad.push_back("alpha^{rs} needs q = k " + tag);
        }
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t l = 0; l < L.size(); ++l) {
            int q = I[a].k, ell = L[l].ell;
            std::string tag = "(" + std::to_string(I[a].i) + "," + std::to_string(q) + ";" + std::to_string(ell) + ")";
            for (int z = 0; z < 2; ++z) {
                auto get = [&](int r, int s) { return z == 0 ? f.beta(a, r, l, s) : f.zeta(a, r, l, s); };
                std::string nm = z == 0 ? "beta" : "zeta";
                if (get(1, 2) != get(2, 1)) bad.push_back(nm + "^{12}=" + nm + "^{21} " + tag);
                if (get(1, 1) != get(2, 2)) bad.push_back(nm + "^{11}=" + nm + "^{22} " + tag);
                if (mod(q + ell) != 0 && (!get(1, 1).is_zero() || !get(2, 2).is_zero()))
                    bad.push_back(nm + "^{rr} needs q = m-l " + tag);
                if (mod(q - ell) != 0 && (!get(1, 2).is_zero() || !get(2, 1).is_zero()))
                    bad.push_back(nm + "^{rs} needs q = l " + tag);
            }
        }
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t l2 = 0; l2 < L.size(); ++l2) {
            std::string tag = "(" + std::to_string(L[l].ell) + ";" + std::to_string(L[l2].ell) + ")";
            if (f.xi(l, 1, l2, 2) != f.xi(l, 2, l2, 1)) bad.push_back("xi^{12}=xi^{21} " + tag);
            if (!f.xi(l, 1, l2, 1).is_zero() || !f.xi(l, 2, l2, 2).is_zero()) bad.push_back("xi^{rr}=0 " + tag);
            if (L[l].ell != L[l2].ell && (!f.xi(l, 1, l2, 2).is_zero() || !f.xi(l, 2, l2, 1).is_zero()))
                bad.push_back("xi^{rs} needs l = l' " + tag);
        }
    return bad;
}

/// Random invariant form: a combination of invariant_basis with small rational coefficients.
inline BilinearForm random_invariant_form(const ModulePtr& V, std::mt19937_64& rng, int range = 3) {
    auto basis = invariant_basis(V);
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    BilinearForm f(V);
    for (const auto& b : basis) f = f + b.scaled(Scalar(Rational(num(rng), den(rng))));
    return f;
}

// ---------------------------------------------------------------------------
// Rack modules: forms constant on classes of pairs

/// Cycle type of a permutation as a sorted list of cycle lengths > 1.
inline std::vector<int> cycle_type(const FinGroup& G, GroupElt x) {
    const auto& p = G.perm(x);
    std::vector<int> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        int len = 0;
        for (std::size_t y = s; !seen[y]; y = p[y]) {
            seen[y] = true;
            ++len;
        }
        if (len > 1) out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// eta = v_id sum_{tau mu = e} + v_3 sum_{tau mu a 3-cycle} + v_22 sum_{tau mu of type (2,2)},
/// the pair classes being read off the product tau mu.
inline BilinearForm rack_class_form(const ModulePtr& V, const Scalar& v_id, const Scalar& v_3, const Scalar& v_22) {
    const FinGroup& G = V->G();
    BilinearForm f(V);
    for (int t = 0; t < V->dim(); ++t)
        for (int u = 0; u < V->dim(); ++u) {
            auto type = cycle_type(G, G.mul(V->degree(t), V->degree(u)));
            if (type.empty()) {
                f.set(t, u, v_id);
            } else if (type == std::vector<int>{3}) {
                f.set(t, u, v_3);
            } else if (type == std::vector<int>{2, 2}) {
                f.set(t, u, v_22);
            } else {
                throw ValidationError("bad_rack", "pair product of unexpected cycle type");
            }
        }
    return f;
}

/// eta = c sum_{tau, mu} d_tau (x) d_mu
inline BilinearForm constant_form(const ModulePtr& V, const Scalar& c) {
    BilinearForm f(V);
    for (int t = 0; t < V->dim(); ++t)
        for (int u = 0; u < V->dim(); ++u) f.set(t, u, c);
    return f;
}

}  // namespace pointed
