#pragma once

// A = B(V) # kG with basis r # g, index r * |G| + g (degree-major since the
// Nichols basis is), and
//   (r # g)(s # h) = r (g . s) # g h,
//   Delta(r # g)   = sum r1 # deg(r2) g  (x)  r2 # g.

#include <memory>
#include <mutex>
#include <unordered_map>

#include "pointed/hopf.hpp"
#include "pointed/nichols.hpp"

namespace pointed {

class BosonHopf : public HopfStructure {
public:
    explicit BosonHopf(NicholsPtr N) : N_(std::move(N)), G_(N_->module().group()) {
        order_ = G_->order();
        dim_ = N_->dim() * order_;
        coproduct_.resize(dim_);
        Key n = dim_;
        for (int a = 0; a < dim_; ++a) {
            int r = a / order_;
            GroupElt g{a % order_};
            Accumulator acc;
            for (const auto& [k, c] : N_->coproduct(r)) {
                int r1 = static_cast<int>(k / N_->dim()), r2 = static_cast<int>(k % N_->dim());
                GroupElt left = G_->mul(N_->group_degree(r2), g);
                acc.add(static_cast<Key>(index(r1, left)) * n + index(r2, g), c);
            }
            coproduct_[a] = acc.finish();
        }
        dense_ = dim_ <= 1024;
        if (dense_) {
            table_.resize(static_cast<std::size_t>(dim_) * dim_);
            for (int a = 0; a < dim_; ++a)
                for (int b = 0; b < dim_; ++b)
                    if (product_defined(a, b)) table_[static_cast<std::size_t>(a) * dim_ + b] = compute_product(a, b);
        }
    }

    const Nichols& nichols() const noexcept { return *N_; }
    const NicholsPtr& nichols_ptr() const noexcept { return N_; }
    const FinGroup& group() const noexcept { return *G_; }
    const GroupPtr& group_ptr() const noexcept { return G_; }
    const YDModule& module() const noexcept { return N_->module(); }

    int index(int r, GroupElt g) const { return r * order_ + g.index; }
    int nichols_part(int a) const { return a / order_; }
    GroupElt group_part(int a) const { return {a % order_}; }
    /// 1 # g
    int grouplike(GroupElt g) const { return g.index; }
    /// x_i # 1
    int generator(int i) const { return index(N_->offset(1) + i, G_->identity()); }

    int dim() const override { return dim_; }
    int degree(int a) const override { return N_->degree(a / order_); }
    int cap() const override { return N_->cap(); }
    int unit() const override { return G_->identity().index; }
    Scalar counit(int a) const override { return a < order_ ? Scalar(1) : Scalar(); }
    const SparseVec& coproduct(int a) const override { return coproduct_.at(a); }

    const SparseVec& product(int a, int b) const override {
        if (!product_defined(a, b))
            throw CapError("product of degrees " + std::to_string(degree(a)) + " and " + std::to_string(degree(b)) +
                           " exceeds the cap " + std::to_string(cap()));
        if (dense_) return table_[static_cast<std::size_t>(a) * dim_ + b];
        Key key = static_cast<Key>(a) * dim_ + b;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = lazy_.find(key);
            if (it != lazy_.end()) return it->second;
        }
        SparseVec v = compute_product(a, b);
        std::lock_guard<std::mutex> lock(mu_);
        return lazy_.emplace(key, std::move(v)).first->second;
    }

    const SparseVec& antipode(int a) const override {
        if (capped()) throw CapError("the antipode needs the full algebra; this slice is capped at degree " + std::to_string(cap()));
        std::call_once(antipode_once_, [this] { build_antipode(); });
        return antipode_.at(a);
    }

    std::string label(int a) const override {
        int r = a / order_;
        GroupElt g{a % order_};
        if (r == 0) return G_->label(g) == "e" ? "1" : G_->label(g);
        return N_->label(r) + (g == G_->identity() ? "" : "#" + G_->label(g));
    }

    /// Group-likes: by the grading, Delta(a) = a (x) a forces a into A_0 = kG, where
    /// the solutions are the 1 # g. Both facts are checked; the result lists 1 # g.
    std::vector<int> group_likes() const {
        Key n = dim_;
        for (int a = 0; a < dim_; ++a)
            for (const auto& [k, c] : coproduct_[a])
                if (degree(static_cast<int>(k / n)) + degree(static_cast<int>(k % n)) != degree(a))
                    throw StructuralError("coproduct does not respect the grading at " + label(a));
        std::vector<int> out;
        for (auto g : G_->elements()) {
            int a = grouplike(g);
            if (coproduct_[a] != SparseVec::unit(static_cast<Key>(a) * n + a) || !counit(a).is_one())
                throw StructuralError("1#" + G_->label(g) + " is not group-like");
            for (auto h : G_->elements())
                if (product(a, grouplike(h)) != SparseVec::unit(grouplike(G_->mul(g, h))))
                    throw StructuralError("group-likes do not multiply as in G");
            out.push_back(a);
        }
        return out;
    }

    /// Basis of P_{h,g} = { x : Delta(x) = x (x) h + g (x) x }.
    std::vector<SparseVec> skew_primitives(GroupElt h, GroupElt g) const {
        Key n = dim_;
        std::vector<SparseVec> cols(dim_);
        for (int a = 0; a < dim_; ++a) {
            Accumulator acc;
            acc.add(coproduct_[a]);
            acc.add(static_cast<Key>(a) * n + grouplike(h), Scalar(-1));
            acc.add(static_cast<Key>(grouplike(g)) * n + a, Scalar(-1));
            cols[a] = acc.finish();
        }
        return nullspace(cols);
    }

private:
    SparseVec compute_product(int a, int b) const {
        int r = a / order_, s = b / order_;
        GroupElt g{a % order_}, h{b % order_};
        int gh = G_->mul(g, h).index;
        Accumulator acc;
        for (const auto& [t, ct] : N_->act(g, s))
            for (const auto& [p, cp] : N_->product(r, static_cast<int>(t))) acc.add(p * order_ + gh, ct * cp);
        return acc.finish();
    }

    // Degree by degree: S(a) (1#g) = eps(a) 1 - sum over the other terms S(a1) a2.
    void build_antipode() const {
        Key n = dim_;
        antipode_.assign(dim_, {});
        for (int a = 0; a < dim_; ++a) {
            GroupElt g = group_part(a);
            Accumulator rest;
            bool top_seen = false;
            for (const auto& [k, c] : coproduct_[a]) {
                int a1 = static_cast<int>(k / n), a2 = static_cast<int>(k % n);
                if (degree(a1) == degree(a)) {
                    if (a1 != a || a2 != grouplike(g) || !c.is_one() || top_seen)
                        throw StructuralError("unexpected top coproduct term at " + label(a));
                    top_seen = true;
                    continue;
                }
                if (a1 >= a) throw StructuralError("antipode recursion out of order at " + label(a));
                rest.add(mul(antipode_[a1], SparseVec::unit(a2)), c);
            }
            if (!top_seen) throw StructuralError("missing top coproduct term at " + label(a));
            SparseVec rhs = SparseVec::unit(unit(), counit(a)) - rest.finish();
            antipode_[a] = mul(rhs, SparseVec::unit(grouplike(G_->inv(g))));
        }
    }

    NicholsPtr N_;
    GroupPtr G_;
    int order_ = 0, dim_ = 0;
    bool dense_ = false;
    std::vector<SparseVec> coproduct_;
    std::vector<SparseVec> table_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Key, SparseVec> lazy_;
    mutable std::once_flag antipode_once_;
    mutable std::vector<SparseVec> antipode_;
};

using BosonPtr = std::shared_ptr<const BosonHopf>;

inline BosonPtr bosonize(NicholsPtr N) { return std::make_shared<const BosonHopf>(std::move(N)); }

}  // namespace pointed
