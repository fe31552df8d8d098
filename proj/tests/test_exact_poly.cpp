#include "convpow/poly.hpp"
#include "convpow/rational.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using convpow::Poly;
using convpow::Rational;
using convpow::testing::random_poly;
using convpow::testing::random_rational;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

bool all_canonical(const Poly& p) {
    for (const auto& c : p.coefficients())
        if (!c.is_canonical()) return false;
    return true;
}

}  // namespace

TEST(Rational, CanonicalFormAfterConstruction) {
    const Rational r(6, -8);
    EXPECT_EQ(r.to_string(), "-3/4");
    EXPECT_TRUE(r.is_canonical());
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_EQ(Rational(0, 5), Rational(0));
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
    EXPECT_EQ(Rational::parse("3/4"), q(3, 4));
    EXPECT_EQ(Rational::parse("-10/4"), q(-5, 2));
    EXPECT_EQ(Rational::parse("7"), q(7));
    EXPECT_EQ(Rational::parse("+7"), q(7));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(), "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/-2", "--1", "1/2/3"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(q(1) / q(0), std::domain_error); }

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
    EXPECT_EQ(q(7, 2).floor(), 3);
    EXPECT_EQ(q(-7, 2).floor(), -4);
    EXPECT_EQ(q(3).floor(), 3);
}

TEST(PBasis, LowOrders) {
    EXPECT_EQ(convpow::p_basis(0), Poly{q(1)});
    EXPECT_EQ(convpow::p_basis(1), (Poly{q(0), q(1)}));
    EXPECT_EQ(convpow::p_basis(3), (Poly{q(0), q(0), q(0), q(1, 6)}));
}

TEST(PBasis, DerivativeStepsDownOneOrder) {
    for (unsigned long k = 1; k <= 30; ++k)
        EXPECT_EQ(convpow::derivative(convpow::p_basis(k)), (convpow::p_basis(k - 1))) << k;
}

TEST(PBasis, ValueAtOneIsInverseFactorial) {
    Rational fact(1);
    for (unsigned long k = 0; k <= 30; ++k) {
        if (k > 0) fact *= Rational(static_cast<long>(k));
        EXPECT_EQ(convpow::p_basis(k)(q(1)), q(1) / fact) << k;
    }
}

TEST(Poly, Evaluation) {
    EXPECT_EQ((Poly{q(0), q(1)})(q(1, 2)), q(1, 2));
    EXPECT_EQ(convpow::p_basis(3)(q(1)), q(1, 6));
    EXPECT_EQ((Poly{q(1), q(-1)})(q(1, 3)), q(2, 3));
    EXPECT_EQ(Poly{}(q(5)), q(0));
}

TEST(Poly, RingOperations) {
    const Poly x{q(0), q(1)};
    EXPECT_TRUE((x + (-x)).is_zero());
    EXPECT_EQ((x + (-x)), Poly{});
    EXPECT_EQ((q(2) * Poly{q(0), q(1, 2)}), x);
    EXPECT_EQ(x * x, (Poly{q(0), q(0), q(1)}));
    EXPECT_EQ(q(0) * x, Poly{});
}

TEST(Poly, ZeroHasUniqueRepresentation) {
    EXPECT_EQ(Poly{q(0)}, Poly{});
    EXPECT_EQ((Poly{q(0), q(0), q(0)}), Poly{});
    EXPECT_EQ(Poly{}.degree(), -1);
    EXPECT_EQ((Poly{q(1), q(2), q(0)}).degree(), 1);
}

TEST(Poly, Translate) {
    const Poly x{q(0), q(1)};
    EXPECT_EQ(convpow::translate(x, q(1)), (Poly{q(-1), q(1)}));
    EXPECT_EQ(convpow::translate(x * x, q(1)), (Poly{q(1), q(-2), q(1)}));
    const Poly p{q(3), q(-1, 2), q(7, 3)};
    EXPECT_EQ(convpow::translate(p, q(0)), p);
}

TEST(Poly, DerivativeAndAntiderivative) {
    EXPECT_EQ(convpow::antiderivative(Poly{q(1)}), (Poly{q(0), q(1)}));
    EXPECT_EQ(convpow::derivative(Poly{q(5)}), Poly{});
    EXPECT_EQ(convpow::antiderivative(Poly{}), Poly{});
}

TEST(Poly, TextForm) {
    EXPECT_EQ(convpow::to_string(Poly{}), "0");
    EXPECT_EQ(convpow::to_string(Poly{q(0), q(1)}), "t");
    EXPECT_EQ(convpow::to_string(Poly{q(1), q(-1)}), "1 - t");
    EXPECT_EQ(convpow::to_string(Poly{q(1, 2), q(-1), q(1, 2)}), "1/2 - t + 1/2*t^2");
    EXPECT_EQ(convpow::to_string(Poly{q(0), q(-3, 2)}, "x"), "-3/2*x");
    EXPECT_EQ(convpow::to_string(Poly{q(-2)}), "-2");
}

TEST(PolyProperty, AntiderivativeRoundTrip) {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = random_poly(rng, 12);
        const Poly prim = convpow::antiderivative(p);
        EXPECT_EQ(convpow::derivative(prim), p);
        EXPECT_EQ(prim[0], q(0));
        EXPECT_TRUE(all_canonical(prim));
    }
}

TEST(PolyProperty, TranslateInverse) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = random_poly(rng, 10);
        const Rational a = random_rational(rng);
        const Poly shifted = convpow::translate(p, a);
        EXPECT_EQ(convpow::translate(shifted, -a), p);
        // pointwise definition q(x) = p(x - a)
        const Rational x = random_rational(rng);
        EXPECT_EQ(shifted(x), p(x - a));
        EXPECT_TRUE(all_canonical(shifted));
    }
}

TEST(PolyProperty, ArithmeticStaysCanonical) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly p = random_poly(rng, 8);
        const Poly r = random_poly(rng, 8);
        const Rational c = random_rational(rng);
        for (const Poly& out : {p + r, p - r, p * r, c * p, convpow::derivative(p)}) {
            EXPECT_TRUE(all_canonical(out));
            if (!out.is_zero()) {
                EXPECT_FALSE(out.coefficients().back().is_zero());
            }
        }
        const Rational x = random_rational(rng);
        EXPECT_EQ((p * r)(x), p(x) * r(x));
        EXPECT_EQ((p + r)(x), p(x) + r(x));
    }
}
