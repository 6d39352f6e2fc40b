#include <gtest/gtest.h>

#include "pointed/racks.hpp"

using namespace pointed;

namespace {

GroupElt el(const FinGroup& G, const std::string& s) { return G.parse(s); }

// Oracle for chi: written out from the definition for a transposition (a b), a < b (1-based labels).
int chi_oracle(const FinGroup& G, const std::string& tau, GroupElt theta) {
    int a = tau[1] - '1', b = tau[2] - '1';
    const auto& p = G.perm(theta);
    return p[a] < p[b] ? 1 : -1;
}

}  // namespace

TEST(Racks, TranspositionsAndFourCycles) {
    auto S3 = symmetric(3);
    Rack X3 = cycle_class_rack(S3, 2);
    EXPECT_EQ(X3.size(), 3);
    EXPECT_TRUE(X3.satisfies_axioms());
    EXPECT_EQ(X3.labels[X3.op[X3.index_of("(12)")][X3.index_of("(23)")]], "(13)");

    auto S4 = symmetric(4);
    Rack X = cycle_class_rack(S4, 2), Y = cycle_class_rack(S4, 4);
    EXPECT_EQ(X.size(), 6);
    EXPECT_EQ(Y.size(), 6);
    EXPECT_TRUE(X.satisfies_axioms());
    EXPECT_TRUE(Y.satisfies_axioms());
    // conjugation oracle
    for (int i = 0; i < Y.size(); ++i)
        for (int j = 0; j < Y.size(); ++j) {
            GroupElt x = Y.elements[i], y = Y.elements[j];
            EXPECT_EQ(Y.elements[Y.op[i][j]], S4->mul(S4->mul(x, y), S4->inv(x)));
        }
}

TEST(Racks, ChiValues) {
    auto G = symmetric(4);
    RackCocycle c = cocycle_chi(cycle_class_rack(G, 2));
    const Rack& X = c.rack;
    int i12 = X.index_of("(12)"), i13 = X.index_of("(13)"), i34 = X.index_of("(34)");
    // q[j][i] = chi_i(j)
    EXPECT_EQ(c.q[i13][i12], CycScalar(-1));
    EXPECT_EQ(c.q[i34][i12], CycScalar(1));
    for (int i = 0; i < X.size(); ++i)
        for (int j = 0; j < X.size(); ++j)
            EXPECT_EQ(c.q[j][i], CycScalar(chi_oracle(*G, X.labels[i], X.elements[j])));
}

TEST(Racks, CocycleIdentities) {
    for (int n : {3, 4, 5}) {
        auto G = symmetric(n);
        Rack X = cycle_class_rack(G, 2);
        EXPECT_TRUE(cocycle_minus_one(X).satisfies_identity());
        EXPECT_TRUE(cocycle_chi(X).satisfies_identity()) << n;
    }
    EXPECT_TRUE(cocycle_minus_one(cycle_class_rack(symmetric(4), 4)).satisfies_identity());
    // a cocycle that breaks the identity is detected
    RackCocycle bad = cocycle_minus_one(cycle_class_rack(symmetric(3), 2));
    bad.q[0][1] = CycScalar(2);
    EXPECT_FALSE(bad.satisfies_identity());
}

TEST(Racks, OneCocycleExtensions) {
    auto G = symmetric(4);
    auto minus = one_cocycle_extension(cocycle_minus_one(cycle_class_rack(G, 2)));
    auto chi = one_cocycle_extension(parse_rack(G, "o2:chi"));
    GroupElt c123 = el(*G, "(123)");
    for (int t = 0; t < 6; ++t) EXPECT_EQ(minus(t, c123), CycScalar(1));
    Rack X = cycle_class_rack(G, 2);
    EXPECT_EQ(chi(X.index_of("(12)"), c123), CycScalar(1));
    // exhaustive 1-cocycle identity, independently of the construction's own check
    for (int t = 0; t < X.size(); ++t)
        for (auto s : G->elements())
            for (auto m : G->elements()) {
                int mt = X.index_of(G->conj(m, X.elements[t]));
                EXPECT_EQ(chi(t, G->mul(s, m)), chi(t, m) * chi(mt, s));
            }
    auto S3 = symmetric(3);
    EXPECT_NO_THROW(one_cocycle_extension(parse_rack(S3, "o2:-1")));
    EXPECT_NO_THROW(one_cocycle_extension(parse_rack(S3, "o2:chi")));
}

TEST(Racks, ParseErrors) {
    EXPECT_THROW(parse_rack(symmetric(4), "o3:-1"), ValidationError);
    EXPECT_THROW(parse_rack(symmetric(4), "o4:chi"), ValidationError);
    EXPECT_THROW(parse_rack(symmetric(5), "o4:-1"), ValidationError);
    EXPECT_THROW(parse_rack(dihedral(12), "o2:-1"), ValidationError);
    EXPECT_EQ(parse_rack(symmetric(4), "o2:chi").name(), "chi");
}
