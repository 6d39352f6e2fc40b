#pragma once

// A Hopf algebra (or a degree-capped slice of one) given by structure constants on
// a graded basis, and an exhaustive axiom checker over basis tuples.
//
// Tensor keys: a (x) b is a * dim + b; a (x) b (x) c is (a * dim + b) * dim + c.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pointed/linalg.hpp"
#include "pointed/parallel.hpp"

namespace pointed {

class HopfStructure {
public:
    virtual ~HopfStructure() = default;

    virtual int dim() const = 0;
    virtual int degree(int a) const = 0;
    /// Largest total degree a product may have; -1 when unbounded.
    virtual int cap() const = 0;
    virtual const SparseVec& product(int a, int b) const = 0;
    virtual const SparseVec& coproduct(int a) const = 0;
    virtual Scalar counit(int a) const = 0;
    virtual int unit() const = 0;
    /// Throws CapError on a capped slice.
    virtual const SparseVec& antipode(int a) const = 0;
    virtual std::string label(int a) const { return "e" + std::to_string(a); }

    bool capped() const { return cap() >= 0; }
    bool product_defined(int a, int b) const { return cap() < 0 || degree(a) + degree(b) <= cap(); }
    int top_degree() const {
        int t = 0;
        for (int a = 0; a < dim(); ++a) t = std::max(t, degree(a));
        return t;
    }

    SparseVec mul(const SparseVec& x, const SparseVec& y) const {
        Accumulator acc;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) acc.add(product(static_cast<int>(a), static_cast<int>(b)), ca * cb);
        return acc.finish();
    }
    SparseVec coproduct_of(const SparseVec& x) const {
        Accumulator acc;
        for (const auto& [a, c] : x) acc.add(coproduct(static_cast<int>(a)), c);
        return acc.finish();
    }
    SparseVec antipode_of(const SparseVec& x) const {
        Accumulator acc;
        for (const auto& [a, c] : x) acc.add(antipode(static_cast<int>(a)), c);
        return acc.finish();
    }
    Scalar counit_of(const SparseVec& x) const {
        Scalar s;
        for (const auto& [a, c] : x) s += c * counit(static_cast<int>(a));
        return s;
    }

    /// Renders a sparse element with basis labels.
    std::string format(const SparseVec& x) const {
        if (x.empty()) return "0";
        std::string out;
        for (const auto& [a, c] : x) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")" + label(static_cast<int>(a));
        }
        return out;
    }
};

/// Iterated coproduct Delta^(k) on a basis element: returns (k+1)-fold tensors as
/// index tuples with coefficients.
struct TensorTerm {
    std::vector<int> idx;
    Scalar coef;
};

inline std::vector<TensorTerm> iterated_coproduct(const HopfStructure& H, int a, int pieces) {
    std::vector<TensorTerm> cur{{{a}, Scalar(1)}};
    int n = H.dim();
    for (int p = 1; p < pieces; ++p) {
        std::vector<TensorTerm> next;
        for (const auto& t : cur) {
            int last = t.idx.back();
            for (const auto& [k, c] : H.coproduct(last)) {
                TensorTerm u{t.idx, t.coef * c};
                u.idx.back() = static_cast<int>(k / n);
                u.idx.push_back(static_cast<int>(k % n));
                next.push_back(std::move(u));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct Witness {
    std::vector<int> indices;
    std::string lhs, rhs;
};

struct AxiomResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::optional<Witness> witness;
};

struct HopfReport {
    std::vector<AxiomResult> axioms;
    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
    const AxiomResult* find(const std::string& name) const {
        for (const auto& a : axioms)
            if (a.name == name) return &a;
        return nullptr;
    }
};

namespace detail {

// Records the first failure seen across workers.
struct FailureSink {
    std::mutex mu;
    std::optional<Witness> witness;
    std::atomic<long long> checked{0};
    void fail(std::vector<int> idx, std::string lhs, std::string rhs) {
        std::lock_guard<std::mutex> lock(mu);
        if (!witness) witness = Witness{std::move(idx), std::move(lhs), std::move(rhs)};
    }
    bool failed() {
        std::lock_guard<std::mutex> lock(mu);
        return witness.has_value();
    }
    AxiomResult result(std::string name) {
        AxiomResult r;
        r.name = std::move(name);
        r.pass = !witness.has_value();
        r.checked = checked.load();
        r.witness = witness;
        return r;
    }
};

inline std::string format_tensor(const HopfStructure& H, const SparseVec& v, int arity) {
    if (v.empty()) return "0";
    std::string out;
    int n = H.dim();
    for (const auto& [k, c] : v) {
        if (!out.empty()) out += " + ";
        std::vector<int> idx(arity);
        Key r = k;
        for (int i = arity - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(r % n);
            r /= n;
        }
        out += "(" + c.to_string() + ")";
        for (int i = 0; i < arity; ++i) out += (i ? "(x)" : "") + H.label(idx[i]);
    }
    return out;
}

}  // namespace detail

struct VerifyOptions {
    int threads = 1;
    bool antipode = true;       // skipped automatically on capped slices
    bool associativity = true;  // the O(dim^3) sweep
};

inline AxiomResult check_associativity(const HopfStructure& H, int threads = 1) {
    detail::FailureSink sink;
    int n = H.dim(), cap = H.cap();
    parallel_for(n, threads, [&](long long ai) {
        int a = static_cast<int>(ai);
        for (int b = 0; b < n && !sink.failed(); ++b) {
            if (!H.product_defined(a, b)) continue;
            const SparseVec& ab = H.product(a, b);
            for (int c = 0; c < n; ++c) {
                if (cap >= 0 && H.degree(a) + H.degree(b) + H.degree(c) > cap) continue;
                const SparseVec& bc = H.product(b, c);
                ++sink.checked;
                // fast path: everything monomial
                if (ab.size() == 1 && bc.size() == 1) {
                    const auto& [k1, c1] = *ab.begin();
                    const auto& [k2, c2] = *bc.begin();
                    const SparseVec& l = H.product(static_cast<int>(k1), c);
                    const SparseVec& r = H.product(a, static_cast<int>(k2));
                    if (l.size() == 1 && r.size() == 1) {
                        if (l.begin()->first == r.begin()->first && l.begin()->second * c1 == r.begin()->second * c2)
                            continue;
                    }
                }
                Accumulator lhs, rhs;
                for (const auto& [k, x] : ab) lhs.add(H.product(static_cast<int>(k), c), x);
                for (const auto& [k, x] : bc) rhs.add(H.product(a, static_cast<int>(k)), x);
                SparseVec L = lhs.finish(), R = rhs.finish();
                if (L != R) {
                    sink.fail({a, b, c}, H.format(L), H.format(R));
                    return;
                }
            }
        }
    });
    return sink.result("associativity");
}

inline AxiomResult check_unit(const HopfStructure& H) {
    detail::FailureSink sink;
    int u = H.unit();
    for (int a = 0; a < H.dim(); ++a) {
        ++sink.checked;
        SparseVec e = SparseVec::unit(a);
        if (H.product(u, a) != e) sink.fail({a}, H.format(H.product(u, a)), H.format(e));
        if (H.product(a, u) != e) sink.fail({a}, H.format(H.product(a, u)), H.format(e));
    }
    return sink.result("unit");
}

inline AxiomResult check_coassociativity(const HopfStructure& H) {
    detail::FailureSink sink;
    Key n = H.dim();
    for (int a = 0; a < H.dim(); ++a) {
        ++sink.checked;
        Accumulator lhs, rhs;
        for (const auto& [k, c] : H.coproduct(a)) {
            Key a1 = k / n, a2 = k % n;
            for (const auto& [k2, c2] : H.coproduct(static_cast<int>(a1))) lhs.add(k2 * n + a2, c * c2);
            for (const auto& [k2, c2] : H.coproduct(static_cast<int>(a2))) rhs.add(a1 * n * n + k2, c * c2);
        }
        SparseVec L = lhs.finish(), R = rhs.finish();
        if (L != R) sink.fail({a}, detail::format_tensor(H, L, 3), detail::format_tensor(H, R, 3));
    }
    return sink.result("coassociativity");
}

inline AxiomResult check_counit(const HopfStructure& H) {
    detail::FailureSink sink;
    Key n = H.dim();
    if (!H.counit(H.unit()).is_one()) sink.fail({H.unit()}, H.counit(H.unit()).to_string(), "1");
    for (int a = 0; a < H.dim(); ++a) {
        ++sink.checked;
        Accumulator l, r;
        for (const auto& [k, c] : H.coproduct(a)) {
            l.add(k % n, c * H.counit(static_cast<int>(k / n)));
            r.add(k / n, c * H.counit(static_cast<int>(k % n)));
        }
        SparseVec e = SparseVec::unit(a), L = l.finish(), R = r.finish();
        if (L != e || R != e) sink.fail({a}, H.format(L), H.format(R));
    }
    return sink.result("counit");
}

/// Delta(ab) = Delta(a) Delta(b) and eps(ab) = eps(a) eps(b) on all in-cap pairs.
inline AxiomResult check_bialgebra(const HopfStructure& H, int threads = 1) {
    detail::FailureSink sink;
    int n = H.dim();
    parallel_for(n, threads, [&](long long ai) {
        int a = static_cast<int>(ai);
        for (int b = 0; b < n; ++b) {
            if (!H.product_defined(a, b)) continue;
            ++sink.checked;
            const SparseVec& ab = H.product(a, b);
            SparseVec L = H.coproduct_of(ab);
            Accumulator r;
            for (const auto& [ka, ca] : H.coproduct(a))
                for (const auto& [kb, cb] : H.coproduct(b)) {
                    const SparseVec& p1 = H.product(static_cast<int>(ka / n), static_cast<int>(kb / n));
                    if (p1.empty()) continue;
                    const SparseVec& p2 = H.product(static_cast<int>(ka % n), static_cast<int>(kb % n));
                    for (const auto& [x, cx] : p1)
                        for (const auto& [y, cy] : p2) r.add(x * n + y, ca * cb * cx * cy);
                }
            SparseVec R = r.finish();
            if (L != R) {
                sink.fail({a, b}, detail::format_tensor(H, L, 2), detail::format_tensor(H, R, 2));
                return;
            }
            if (H.counit_of(ab) != H.counit(a) * H.counit(b))
                sink.fail({a, b}, H.counit_of(ab).to_string(), (H.counit(a) * H.counit(b)).to_string());
        }
    });
    return sink.result("bialgebra");
}

/// m(S (x) id) Delta = u eps = m(id (x) S) Delta.
inline AxiomResult check_antipode(const HopfStructure& H) {
    detail::FailureSink sink;
    Key n = H.dim();
    for (int a = 0; a < H.dim(); ++a) {
        ++sink.checked;
        Accumulator l, r;
        for (const auto& [k, c] : H.coproduct(a)) {
            int a1 = static_cast<int>(k / n), a2 = static_cast<int>(k % n);
            l.add(H.mul(H.antipode(a1), SparseVec::unit(a2)), c);
            r.add(H.mul(SparseVec::unit(a1), H.antipode(a2)), c);
        }
        SparseVec e = SparseVec::unit(H.unit(), H.counit(a)), L = l.finish(), R = r.finish();
        if (L != e) sink.fail({a}, H.format(L), H.format(e));
        if (R != e) sink.fail({a}, H.format(R), H.format(e));
    }
    return sink.result("antipode");
}

inline HopfReport verify_hopf_axioms(const HopfStructure& H, VerifyOptions opt = {}) {
    HopfReport rep;
    if (opt.associativity) rep.axioms.push_back(check_associativity(H, opt.threads));
    rep.axioms.push_back(check_unit(H));
    rep.axioms.push_back(check_coassociativity(H));
    rep.axioms.push_back(check_counit(H));
    rep.axioms.push_back(check_bialgebra(H, opt.threads));
    if (opt.antipode && !H.capped()) rep.axioms.push_back(check_antipode(H));
    return rep;
}

/// Wraps a structure and overrides one product entry; a self-test for the checker.
class CorruptedProduct : public HopfStructure {
public:
    CorruptedProduct(const HopfStructure& base, int a, int b, SparseVec value)
        : base_(base), a_(a), b_(b), value_(std::move(value)) {}
    int dim() const override { return base_.dim(); }
    int degree(int a) const override { return base_.degree(a); }
    int cap() const override { return base_.cap(); }
    const SparseVec& product(int a, int b) const override {
        return a == a_ && b == b_ ? value_ : base_.product(a, b);
    }
    const SparseVec& coproduct(int a) const override { return base_.coproduct(a); }
    Scalar counit(int a) const override { return base_.counit(a); }
    int unit() const override { return base_.unit(); }
    const SparseVec& antipode(int a) const override { return base_.antipode(a); }
    std::string label(int a) const override { return base_.label(a); }

private:
    const HopfStructure& base_;
    int a_, b_;
    SparseVec value_;
};

}  // namespace pointed
