#include "convpow/splinespace.hpp"

#include <gtest/gtest.h>

#include <random>

using convpow::Partition;
using convpow::Poly;
using convpow::Rational;
using convpow::SplineKernel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({q(0)}), std::invalid_argument);
    EXPECT_THROW(Partition({q(0), q(0)}), std::invalid_argument);
    EXPECT_THROW(Partition({q(1), q(0)}), std::invalid_argument);
    EXPECT_EQ(Partition::uniform(0, 4).interval_count(), 4u);
}

TEST(BuildBasis, UnitPartitionWithTriangleKernel) {
    const auto basis = convpow::build_basis(Partition::uniform(0, 3), SplineKernel(2));
    ASSERT_EQ(basis.size(), 3u);
    const auto chi3 = SplineKernel(3).to_piecewise(0);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(convpow::total_integral(basis.elements[i]), q(1));
        EXPECT_EQ(basis.elements[i], convpow::translate(chi3, Rational(static_cast<long>(i))));
    }
}

TEST(BuildBasis, SingleIntervalGivesNextPower) {
    const auto basis = convpow::build_basis(Partition({q(0), q(1)}), SplineKernel(2));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis.elements[0], SplineKernel(3).to_piecewise(0));
}

TEST(BuildBasis, SupportsAddUp) {
    const auto basis = convpow::build_basis(Partition({q(0), q(1, 2), q(1)}), SplineKernel(2));
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis.elements[0].support_begin(), q(0));
    EXPECT_EQ(basis.elements[0].support_end(), q(5, 2));
    EXPECT_EQ(basis.elements[1].support_begin(), q(1, 2));
    EXPECT_EQ(basis.elements[1].support_end(), q(3));
}

TEST(BuildBasis, ElementProperties) {
    const Partition p({q(-1), q(-1, 3), q(1, 4), q(2), q(5, 2)});
    for (int n = 1; n <= 5; ++n) {
        const auto basis = convpow::build_basis(p, SplineKernel(n));
        EXPECT_EQ(basis.low_smoothness(), n < 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& e = basis.elements[i];
            EXPECT_EQ(convpow::total_integral(e), p.knots()[i + 1] - p.knots()[i]);
            for (long j = -20; j <= 80; ++j) EXPECT_GE(e(Rational(j, 10)).sign(), 0);
            EXPECT_TRUE(convpow::matches_derivatives(e, n - 1)) << "n=" << n << " i=" << i;
            EXPECT_FALSE(convpow::matches_derivatives(e, n)) << "n=" << n << " i=" << i;
        }
    }
}

TEST(GramMatrix, Examples) {
    const auto one = convpow::build_basis(Partition({q(0), q(1)}), SplineKernel(2));
    const auto g1 = convpow::gram_matrix(one);
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_GT(g1[0][0].sign(), 0);

    convpow::SplineBasis disjoint = convpow::build_basis(Partition({q(0), q(1)}), SplineKernel(2));
    disjoint.elements.push_back(convpow::translate(disjoint.elements[0], q(10)));
    const auto gd = convpow::gram_matrix(disjoint);
    EXPECT_EQ(gd[0][1], q(0));
    EXPECT_EQ(gd[1][0], q(0));
    EXPECT_EQ(gd[0][0], gd[1][1]);

    const auto unit = convpow::gram_matrix(convpow::build_basis(Partition::uniform(0, 2), SplineKernel(2)));
    EXPECT_EQ(unit[0][0], unit[1][1]);
    EXPECT_EQ(unit[0][1], unit[1][0]);
}

TEST(GramMatrix, SymmetricWithPositiveDiagonal) {
    const Partition p({q(0), q(1, 3), q(1), q(3, 2), q(4)});
    const auto g = convpow::gram_matrix(convpow::build_basis(p, SplineKernel(3)));
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_GT(g[i][i].sign(), 0);
        for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g[i][j], g[j][i]);
    }
}

TEST(Determinant, SmallMatrices) {
    EXPECT_EQ(convpow::determinant({{q(2)}}), q(2));
    EXPECT_EQ(convpow::determinant({{q(0), q(1)}, {q(1), q(0)}}), q(-1));
    EXPECT_EQ(convpow::determinant({{q(1), q(2)}, {q(2), q(4)}}), q(0));
    EXPECT_EQ(convpow::determinant({{q(1, 2), q(1, 3), q(1, 4)}, {q(1, 3), q(1, 4), q(1, 5)}, {q(1, 4), q(1, 5), q(1, 6)}}),
              q(1, 43200));
}

TEST(CheckIndependence, Examples) {
    const auto single = convpow::build_basis(Partition({q(0), q(1)}), SplineKernel(2));
    EXPECT_TRUE(convpow::check_independence(single).independent);

    auto dup = convpow::build_basis(Partition::uniform(0, 2), SplineKernel(2));
    dup.elements.push_back(dup.elements[0]);
    const auto rep = convpow::check_independence(dup);
    EXPECT_FALSE(rep.independent);
    EXPECT_EQ(rep.gram_determinant, q(0));

    const auto four = convpow::build_basis(Partition::uniform(0, 4), SplineKernel(3));
    const auto ok = convpow::check_independence(four);
    EXPECT_TRUE(ok.independent);
    EXPECT_GT(ok.gram_determinant.sign(), 0);
}

TEST(CheckIndependence, RandomCombinationIsNotIdenticallyZero) {
    // Cross-check the determinant verdict: a nontrivial combination of the
    // elements is a degree <= 3 piecewise polynomial with finitely many
    // pieces, so sampling more than 4 points per piece must find a nonzero.
    const auto basis = convpow::build_basis(Partition::uniform(0, 4), SplineKernel(3));
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        convpow::PiecewisePoly combo;
        bool nontrivial = false;
        for (const auto& e : basis.elements) {
            const long c = coef(rng);
            nontrivial = nontrivial || c != 0;
            combo = combo + Rational(c) * e;
        }
        if (!nontrivial) continue;
        bool found_nonzero = false;
        for (long j = 0; j <= 80 && !found_nonzero; ++j) found_nonzero = !combo(Rational(j, 10)).is_zero();
        EXPECT_TRUE(found_nonzero);
    }
}

TEST(CheckIndependence, SizeLimit) {
    const auto big = convpow::build_basis(Partition::uniform(0, 13), SplineKernel(2));
    EXPECT_THROW(convpow::check_independence(big), std::length_error);
}

TEST(PartitionOfUnity, Examples) {
    const auto tri = convpow::partition_of_unity(SplineKernel(2), 3);
    for (std::size_t j = 1; j < 3; ++j) EXPECT_EQ(tri.piece(j), Poly{q(1)});
    EXPECT_EQ(tri(q(1)), q(1));
    EXPECT_EQ(tri(q(3)), q(1));

    const auto boxes = convpow::partition_of_unity(SplineKernel(1), 2);
    EXPECT_EQ(boxes.piece(0), Poly{q(1)});
    EXPECT_EQ(boxes.piece(1), Poly{q(1)});

    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(convpow::partition_of_unity(SplineKernel(n), n + 2)(q(n - 1) + q(1, 3)), q(1)) << n;

    EXPECT_THROW(convpow::partition_of_unity(SplineKernel(4), 3), std::invalid_argument);
}

TEST(PartitionOfUnity, PlateauIsStructurallyOne) {
    for (int n = 1; n <= 10; ++n)
        for (int count = n; count <= n + 3; ++count) {
            const auto u = convpow::partition_of_unity(SplineKernel(n), count);
            for (int j = n - 1; j < count; ++j) EXPECT_EQ(u.piece(static_cast<std::size_t>(j)), Poly{q(1)});
            // and it equals the literal sum of translates
            convpow::PiecewisePoly literal;
            const auto f = SplineKernel(n).to_piecewise(0);
            for (int k = 0; k < count; ++k) literal = literal + convpow::translate(f, Rational(k));
            EXPECT_EQ(u, literal);
        }
}

TEST(BasisExport, JsonShape) {
    const auto basis = convpow::build_basis(Partition({q(0), q(1, 2)}), SplineKernel(2));
    const auto j = convpow::to_json(basis);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["breakpoints"][0], "0");
    EXPECT_EQ(j[0]["breakpoints"][1], "1/2");
    EXPECT_EQ(convpow::piecewise_from_json(j[0]), basis.elements[0]);
}
