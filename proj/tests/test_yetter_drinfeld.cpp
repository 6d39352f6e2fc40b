#include <gtest/gtest.h>

#include "pointed/yetter_drinfeld.hpp"

using namespace pointed;

namespace {

CycScalar w(int k) { return root_of_unity(12, k); }

// Oracle: the module axioms checked directly from act() and degree().
void expect_yd(const YDModule& V) {
    const FinGroup& G = V.G();
    for (auto s : G.elements())
        for (int i = 0; i < V.dim(); ++i) {
            auto m = V.act(s, i);
            EXPECT_EQ(V.degree(m.index), G.conj(s, V.degree(i)));
            for (auto t : G.elements()) {
                auto a = V.act(s, V.act(t, i).index);
                auto st = V.act(G.mul(s, t), i);
                EXPECT_EQ(a.index, st.index);
                EXPECT_EQ(a.coef * V.act(t, i).coef, st.coef);
            }
        }
}

}  // namespace

TEST(YetterDrinfeld, ModuleMell) {
    auto G = dihedral(12);
    auto V = module_M_ell(G, 1);
    GroupElt h = G->dihedral(0, 1), g = G->dihedral(1, 0);
    EXPECT_EQ(V.act(h, 0).index, 0);
    EXPECT_EQ(V.act(h, 0).coef, w(1));
    EXPECT_EQ(V.act(h, 1).coef, w(-1));
    EXPECT_EQ(V.act(g, 0).index, 1);
    EXPECT_EQ(V.degree(0), G->dihedral(0, 6));
    EXPECT_EQ(V.degree(1), G->dihedral(0, 6));
    expect_yd(V);
    EXPECT_TRUE(V.braiding_is_symmetric());
    EXPECT_TRUE(V.braiding_is_minus_flip());
    for (int l : {3, 5}) EXPECT_TRUE(module_M_ell(G, l).braiding_is_minus_flip());
    EXPECT_THROW(module_M_ell(G, 2), ValidationError);
}

TEST(YetterDrinfeld, ModuleMik) {
    auto G = dihedral(12);
    EXPECT_TRUE(in_J(12, 1, 6));
    EXPECT_FALSE(in_J(12, 1, 5));
    auto V = module_M_ik(G, 1, 6);
    GroupElt h = G->dihedral(0, 1);
    EXPECT_EQ(V.act(h, 1).coef, w(-6));
    EXPECT_EQ(V.degree(0), G->dihedral(0, 1));
    EXPECT_EQ(V.degree(1), G->dihedral(0, -1));
    expect_yd(V);
    EXPECT_TRUE(V.braiding_is_symmetric());
    EXPECT_TRUE(V.braiding_is_minus_flip());
    auto W = module_M_ik(G, 2, 3);
    EXPECT_EQ(W.act(h, 0).coef, w(3));
    expect_yd(W);
    EXPECT_TRUE(W.braiding_is_minus_flip());
}

TEST(YetterDrinfeld, IndexData) {
    auto J = scan_J(12);
    std::vector<std::pair<int, int>> expect{{1, 6}, {2, 3}, {2, 9}, {3, 2}, {3, 6}, {3, 10}, {5, 6}};
    EXPECT_EQ(J, expect);
    // oracle for J: w^{ik} = -1 means ik = 6 mod 12
    for (auto [i, k] : J) EXPECT_EQ((i * k) % 12, 6);
    EXPECT_NO_THROW(validate_index_data({12, {{1, 6}, {3, 6}}, {}}));
    EXPECT_NO_THROW(validate_index_data({12, {{2, 3}}, {3}}));
    auto code = [](const DihedralIndexData& d) {
        try {
            validate_index_data(d);
        } catch (const ValidationError& e) {
            return e.code();
        }
        return std::string("ok");
    };
    EXPECT_EQ(code({12, {{1, 5}}, {}}), "not_in_J");
    EXPECT_EQ(code({12, {{1, 6}, {2, 3}}, {}}), "not_in_I");
    EXPECT_EQ(code({12, {}, {4}}), "not_in_L");
    EXPECT_EQ(code({12, {{1, 6}}, {3}}), "not_in_K");
    EXPECT_EQ(code({7, {{1, 6}}, {}}), "bad_m");
    EXPECT_EQ(code({12, {}, {}}), "empty_data");
}

TEST(YetterDrinfeld, DirectSums) {
    auto G = dihedral(12);
    auto V = dihedral_module(G, {12, {{1, 6}, {1, 6}}, {}});
    EXPECT_EQ(V.dim(), 4);
    expect_yd(V);
    auto M = dihedral_module(G, {12, {{2, 3}}, {3}});
    EXPECT_EQ(M.dim(), 4);
    expect_yd(M);
    EXPECT_TRUE(M.braiding_is_minus_flip());
    // the braiding of the sum restricted to a summand is the summand's braiding
    auto part = module_M_ik(G, 2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            EXPECT_EQ(M.braid(i, j).index, part.braid(i, j).index);
            EXPECT_EQ(M.braid(i, j).coef, part.braid(i, j).coef);
        }
}

TEST(YetterDrinfeld, RackModules) {
    auto S3 = symmetric(3);
    auto V = rack_module(parse_rack(S3, "o2:-1"));
    int x12 = 0;
    ASSERT_EQ(V.label(x12), "x(12)");
    EXPECT_EQ(V.act(V.degree(x12), x12).coef, CycScalar(-1));
    EXPECT_EQ(V.act(V.degree(x12), x12).index, x12);
    expect_yd(V);
    EXPECT_TRUE(V.satisfies_braid_equation());
    EXPECT_FALSE(V.braiding_is_minus_flip());
    // c(x_i (x) x_j) = q_ij x_{i|>j} (x) x_i
    auto rc = parse_rack(S3, "o2:-1");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(V.braid(i, j).index, rc.rack.op[i][j]);
            EXPECT_EQ(V.braid(i, j).coef, rc.q[i][j]);
        }

    auto S4 = symmetric(4);
    auto C = rack_module(parse_rack(S4, "o2:chi"));
    int x12c = 0, h34 = S4->parse("(34)").index;
    EXPECT_EQ(C.act({h34}, x12c).coef, CycScalar(1));
    expect_yd(C);
    EXPECT_TRUE(C.satisfies_braid_equation());
    auto D = rack_module(parse_rack(S4, "o4:-1"));
    for (int i = 0; i < D.dim(); ++i)
        if (D.label(i) == "x(1234)") {
            EXPECT_EQ(S4->label(D.degree(i)), "(1234)");
        }
    expect_yd(D);
    EXPECT_TRUE(D.satisfies_braid_equation());
}

TEST(YetterDrinfeld, RejectsBrokenData) {
    auto G = dihedral(12);
    std::vector<std::vector<int>> perm(G->order(), std::vector<int>{0, 1});
    std::vector<std::vector<CycScalar>> chi(G->order(), std::vector<CycScalar>{CycScalar(1), CycScalar(1)});
    // trivial action with a non-central degree breaks compatibility
    EXPECT_THROW(YDModule(G, {"a", "b"}, {G->dihedral(0, 1), G->dihedral(0, 1)}, perm, chi, {}), Error);
}
