#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pointed/cyclotomic.hpp"
#include "pointed/rational.hpp"

using namespace pointed;

namespace {

using cd = std::complex<double>;

// Oracle: evaluate an element of Q(zeta_m) numerically from its power-basis coefficients.
cd numeric(const CycScalar& x) {
    const double pi = std::acos(-1.0);
    cd z = std::polar(1.0, 2 * pi / x.conductor()), acc = 0, p = 1;
    for (const auto& c : x.dense_coeffs()) {
        acc += p * mpq_class(c.to_mpq()).get_d();
        p *= z;
    }
    return acc;
}

bool close(cd a, cd b) { return std::abs(a - b) < 1e-9; }

CycScalar random_element(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c;
    for (int i = 0; i < cyclotomic_field(m).degree(); ++i) c.emplace_back(num(rng), den(rng));
    return CycScalar::from_coeffs(m, c);
}

}  // namespace

TEST(Rational, NormalizesAndCompares) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("-7/21").to_string(), "-1/3");
    EXPECT_EQ(Rational::parse("5").to_string(), "5");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), ValidationError);
}

TEST(Rational, MatchesGmpOnOverflowingValues) {
    // products beyond 64 bits must fall back to exact big arithmetic
    Rational a(4000000000LL, 3), b(5000000000LL, 7);
    mpq_class qa("4000000000/3"), qb("5000000000/7");
    qa.canonicalize();
    qb.canonicalize();
    Rational p = a * b;
    mpq_class qp = qa * qb;
    EXPECT_EQ(p.to_mpq(), qp);
    Rational s = p + a;
    EXPECT_EQ(s.to_mpq(), mpq_class(qp + qa));
    Rational back = s - a;
    EXPECT_EQ(back, p);
    EXPECT_EQ((p / b), a);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1000000007LL, 1000000007LL), den(1, 1000003);
    for (int t = 0; t < 500; ++t) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
        mpq_class qx = x.to_mpq(), qy = y.to_mpq(), qz = z.to_mpq();
        EXPECT_EQ((x * (y + z)).to_mpq(), mpq_class(qx * (qy + qz)));
        EXPECT_EQ((x - y * z).to_mpq(), mpq_class(qx - qy * qz));
        if (!y.is_zero()) {
            EXPECT_EQ(x / y * y, x);
        }
    }
}

TEST(Cyclotomic, Polynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
    // x^n - 1 = prod_{d | n} Phi_d
    for (int n : {6, 8, 9, 10, 12, 15}) {
        IntPoly prod{1};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = detail::multiply(prod, cyclotomic_polynomial(d));
        IntPoly expect(n + 1, 0);
        expect[0] = -1;
        expect[n] = 1;
        EXPECT_EQ(prod, expect) << "n=" << n;
    }
}

TEST(Cyclotomic, RootsOfUnity) {
    EXPECT_TRUE(root_of_unity(12, 0).is_one());
    EXPECT_EQ(root_of_unity(12, 6), CycScalar(-1));
    // zeta^4 = zeta^2 - 1 modulo zeta^4 - zeta^2 + 1
    EXPECT_EQ(root_of_unity(12, 4), CycScalar::from_coeffs(12, {Rational(-1), Rational(0), Rational(1)}));
    CycScalar w = root_of_unity(12, 1);
    EXPECT_TRUE((root_of_unity(12, 6) + CycScalar(1)).is_zero());
    EXPECT_EQ(w.inverse(), root_of_unity(12, 11));
    EXPECT_TRUE((root_of_unity(12, 2) * root_of_unity(12, 10)).is_one());
    // sqrt(3) = w + w^-1
    CycScalar s = w + w.inverse();
    EXPECT_EQ(s * s, CycScalar(3));
}

TEST(Cyclotomic, ArithmeticAgreesWithComplexEvaluation) {
    std::mt19937_64 rng(11);
    for (int m : {3, 4, 8, 12}) {
        for (int t = 0; t < 100; ++t) {
            CycScalar a = random_element(rng, m), b = random_element(rng, m);
            EXPECT_TRUE(close(numeric(a + b), numeric(a) + numeric(b)));
            EXPECT_TRUE(close(numeric(a * b), numeric(a) * numeric(b)));
            if (!b.is_zero()) {
                EXPECT_TRUE(close(numeric(a / b), numeric(a) / numeric(b)));
            }
        }
    }
}

TEST(Cyclotomic, RationalsMixWithAnyConductor) {
    CycScalar half(Rational(1, 2));
    CycScalar w = root_of_unity(12, 1);
    EXPECT_TRUE(half.is_rational());
    EXPECT_TRUE(close(numeric(half * w), 0.5 * numeric(w)));
    EXPECT_EQ(w - w, CycScalar());
    EXPECT_TRUE((w - w).is_zero());
    EXPECT_THROW(CycScalar().inverse(), DivisionByZero);
}
