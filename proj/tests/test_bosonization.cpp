#include <gtest/gtest.h>

#include <thread>

#include "pointed/bosonization.hpp"

using namespace pointed;

namespace {

BosonPtr boson(const YDModule& V, Nichols::Options opt = {}) { return bosonize(build_truncated(V, opt)); }

SparseVec e(int a, CycScalar c = CycScalar(1)) { return SparseVec::unit(a, c); }

int threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

}  // namespace

TEST(Bosonization, SmashProductRules) {
    auto G = dihedral(12);
    auto A = boson(module_M_ik(G, 1, 6));
    EXPECT_EQ(A->dim(), 96);
    const auto& N = A->nichols();
    const auto& V = A->module();
    for (auto g : G->elements())
        for (int i = 0; i < 2; ++i) {
            // (1 # g)(x # 1) = (g . x) # g
            auto m = V.act(g, i);
            EXPECT_EQ(A->product(A->grouplike(g), A->generator(i)), e(A->index(N.offset(1) + m.index, g), m.coef));
            // (x # 1)(1 # g) = x # g
            EXPECT_EQ(A->product(A->generator(i), A->grouplike(g)), e(A->index(N.offset(1) + i, g)));
        }
    // (x1 # 1)(x1 # 1) = 0 in an exterior algebra
    EXPECT_TRUE(A->product(A->generator(0), A->generator(0)).empty());
    EXPECT_EQ(A->counit(A->generator(0)), CycScalar());
    EXPECT_EQ(A->counit(A->grouplike(G->dihedral(1, 3))), CycScalar(1));
}

TEST(Bosonization, CoproductOfGenerators) {
    auto G = dihedral(12);
    auto A = boson(module_M_ell(G, 1));
    Key n = A->dim();
    GroupElt h6 = G->dihedral(0, 6);
    for (int i = 0; i < 2; ++i) {
        int x = A->generator(i);
        // Delta(x # 1) = x # 1 (x) 1 + 1 # g_x (x) x # 1
        SparseVec expect = e(static_cast<int>(x * n + A->unit())) + e(static_cast<int>(A->grouplike(h6) * n + x));
        EXPECT_EQ(A->coproduct(x), expect);
    }
    // skew primitives P_{1, h^6} are spanned by 1 - h^6 and the generators
    auto P = A->skew_primitives(G->identity(), h6);
    EXPECT_EQ(P.size(), 3u);
    EXPECT_EQ(A->skew_primitives(G->identity(), G->dihedral(0, 1)).size(), 1u);
}

TEST(Bosonization, GroupLikesFormTheGroup) {
    auto G = dihedral(12);
    auto A = boson(module_M_ik(G, 2, 3));
    auto gl = A->group_likes();
    EXPECT_EQ(gl.size(), 24u);
    auto S = boson(rack_module(parse_rack(symmetric(3), "o2:-1")));
    EXPECT_EQ(S->group_likes().size(), 6u);
}

TEST(Bosonization, Antipode) {
    auto G = dihedral(12);
    for (auto V : {module_M_ik(G, 1, 6), rack_module(parse_rack(symmetric(3), "o2:-1"))}) {
        auto A = boson(V);
        const auto& H = A->group();
        for (auto g : H.elements()) EXPECT_EQ(A->antipode(A->grouplike(g)), e(A->grouplike(H.inv(g))));
        for (int i = 0; i < V.dim(); ++i) {
            // S(x # 1) = -(1 # g_x^-1)(x # 1)
            SparseVec rhs = A->product(A->grouplike(H.inv(V.degree(i))), A->generator(i)).scaled(CycScalar(-1));
            EXPECT_EQ(A->antipode(A->generator(i)), rhs);
        }
        // S^2 = (-1)^deg here, so S^2 != id but S^4 = id
        bool some_differs = false;
        for (int a = 0; a < A->dim(); ++a) {
            SparseVec s2 = A->antipode_of(A->antipode(a));
            CycScalar sign(A->degree(a) % 2 ? -1 : 1);
            EXPECT_EQ(s2, e(a, sign)) << A->label(a);
            EXPECT_EQ(A->antipode_of(A->antipode_of(s2)), e(a));
            some_differs |= s2 != e(a);
        }
        EXPECT_TRUE(some_differs);
    }
}

TEST(Bosonization, HopfAxiomsOnFiniteInstances) {
    auto G = dihedral(12);
    auto A = boson(module_M_ik(G, 1, 6));
    EXPECT_TRUE(verify_hopf_axioms(*A, {.threads = threads()}).all_pass());
    auto B = boson(module_M_ell(G, 3));
    EXPECT_TRUE(verify_hopf_axioms(*B, {.threads = threads()}).all_pass());
    auto S = boson(rack_module(parse_rack(symmetric(3), "o2:-1")));
    EXPECT_EQ(S->dim(), 72);
    auto rep = verify_hopf_axioms(*S, {.threads = threads()});
    EXPECT_TRUE(rep.all_pass());
    ASSERT_NE(rep.find("antipode"), nullptr);
    EXPECT_GT(rep.find("antipode")->checked, 0);
}

TEST(Bosonization, CappedSlice) {
    auto A = boson(rack_module(parse_rack(symmetric(4), "o2:-1")), {.cap = 2});
    EXPECT_TRUE(A->capped());
    EXPECT_EQ(A->dim(), (1 + 6 + 19) * 24);
    auto rep = verify_hopf_axioms(*A, {.threads = threads(), .associativity = false});
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.find("antipode"), nullptr);
    EXPECT_THROW(A->product(A->generator(0), A->index(A->nichols().offset(2), A->group().identity())), CapError);
}

TEST(Bosonization, CheckerCatchesCorruption) {
    auto G = dihedral(12);
    auto A = boson(module_M_ik(G, 1, 6));
    int x = A->generator(0), y = A->generator(1);
    CorruptedProduct bad(*A, x, y, A->product(y, x));
    auto rep = verify_hopf_axioms(bad);
    EXPECT_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& r : rep.axioms)
        if (!r.pass) {
            ASSERT_TRUE(r.witness.has_value()) << r.name;
            EXPECT_NE(r.witness->lhs, r.witness->rhs);
            witnessed = true;
        }
    EXPECT_TRUE(witnessed);
}
