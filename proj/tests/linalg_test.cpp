#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "test_support.hpp"
#include "uecsm/cartesian.hpp"
#include "uecsm/eigen.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/fixtures.hpp"
#include "uecsm/linalg.hpp"

namespace uecsm {
namespace {

using testing::max_abs_diff;

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no uecsm::Error thrown";
    return ErrorCode::PreconditionViolated;
}

TEST(Adjoint, Examples) {
    EXPECT_EQ(adjoint(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
    EXPECT_EQ(adjoint(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), (ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}));
    EXPECT_EQ(adjoint(ComplexMatrix{{kI}}), ComplexMatrix{{-kI}});
}

TEST(Adjoint, IsAnExactInvolution) {
    RandomStream rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix m = sample_ginibre(1 + trial % 6, rng);
        EXPECT_EQ(adjoint(adjoint(m)), m);
    }
}

TEST(Matrix, RejectsRaggedRows) {
    EXPECT_EQ(code_of([] { (void)ComplexMatrix{{1.0, 2.0}, {3.0}}; }), ErrorCode::DimensionMismatch);
}

TEST(HermitianEigen, WorkedExampleRealPart) {
    const auto pair = cartesian_decompose(fixtures::worked_example());
    const EigenSystem ea = hermitian_eigen(pair.a);
    ASSERT_EQ(ea.dim(), 3u);
    // Ascending: -2 < 2(1 - sqrt 2).
    EXPECT_NEAR(ea.values[0], -2.0, 1e-10);
    EXPECT_NEAR(ea.values[1], 2 * (1 - kSqrt2), 1e-10);
    EXPECT_NEAR(ea.values[2], 2 * (1 + kSqrt2), 1e-10);
    const EigenSystem eb = hermitian_eigen(pair.b);
    EXPECT_NEAR(eb.values[0], 2 * (1 - kSqrt3), 1e-10);
    EXPECT_NEAR(eb.values[1], 0.0, 1e-10);
    EXPECT_NEAR(eb.values[2], 2 * (1 + kSqrt3), 1e-10);
}

TEST(HermitianEigen, JordanRealPart) {
    const auto pair = cartesian_decompose(fixtures::jordan_with_parameter(1.0));
    for (const auto& h : {pair.a, pair.b}) {
        const EigenSystem e = hermitian_eigen(h);
        EXPECT_NEAR(e.values[0], -kSqrt2 / 2, 1e-12);
        EXPECT_NEAR(e.values[1], 0.0, 1e-12);
        EXPECT_NEAR(e.values[2], kSqrt2 / 2, 1e-12);
    }
}

TEST(HermitianEigen, Identity) {
    const EigenSystem e = hermitian_eigen(ComplexMatrix::identity(3));
    EXPECT_EQ(e.values, (std::vector<double>{1.0, 1.0, 1.0}));
    EXPECT_EQ(e.vectors, ComplexMatrix::identity(3));
}

TEST(HermitianEigen, RejectsNonHermitian) {
    EXPECT_EQ(code_of([] { (void)hermitian_eigen(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }),
              ErrorCode::NotHermitian);
    EXPECT_EQ(code_of([] { (void)hermitian_eigen(ComplexMatrix{{Complex(1, 1)}}); }),
              ErrorCode::NotHermitian);
}

TEST(HermitianEigen, RejectsNonFinite) {
    EXPECT_EQ(code_of([] { (void)hermitian_eigen(ComplexMatrix{{std::nan("")}}); }), ErrorCode::NonFinite);
}

TEST(HermitianEigen, MatchesClosedForm2x2) {
    RandomStream rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix h = testing::random_hermitian(2, rng);
        const auto expected = testing::eigenvalues_2x2(h);
        const EigenSystem e = hermitian_eigen(h);
        EXPECT_NEAR(e.values[0], expected[0], 1e-9);
        EXPECT_NEAR(e.values[1], expected[1], 1e-9);
    }
}

TEST(HermitianEigen, MatchesClosedForm3x3) {
    RandomStream rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix h = testing::random_hermitian(3, rng);
        const auto expected = testing::eigenvalues_3x3(h);
        const EigenSystem e = hermitian_eigen(h);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(e.values[k], expected[k], 1e-9);
    }
}

TEST(HermitianEigen, SystemInvariants) {
    RandomStream rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        ComplexMatrix h = testing::random_hermitian(n, rng);
        if (trial % 5 == 0) h *= 1e4;
        const EigenSystem e = hermitian_eigen(h);
        const double scale = std::max(1.0, frobenius_norm(h));
        EXPECT_LE(unitarity_defect(e.vectors), 1e-12 * n);
        const ComplexMatrix d = ComplexMatrix::diagonal(std::span<const double>(e.values));
        EXPECT_LE(frobenius_norm(h * e.vectors - e.vectors * d), 1e-10 * scale);
        EXPECT_LE(frobenius_norm(e.vectors * d * adjoint(e.vectors) - h), 1e-9 * scale);
        for (std::size_t i = 1; i < n; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
    }
}

TEST(HermitianEigen, LargestEntryOfEachVectorIsRealPositive) {
    RandomStream rng(14);
    const EigenSystem e = hermitian_eigen(testing::random_hermitian(5, rng));
    for (std::size_t j = 0; j < 5; ++j) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < 5; ++i)
            if (std::abs(e.vectors(i, j)) > std::abs(e.vectors(best, j))) best = i;
        EXPECT_GT(e.vectors(best, j).real(), 0.0);
        EXPECT_EQ(e.vectors(best, j).imag(), 0.0);
    }
}

TEST(HermitianEigen, RepeatedEigenvaluesGiveOrthonormalBasis) {
    RandomStream rng(15);
    const ComplexMatrix w = testing::unitary_qr(4, rng);
    const std::vector<double> d{-1.0, 2.0, 2.0, 2.0};
    const ComplexMatrix h = w * ComplexMatrix::diagonal(std::span<const double>(d)) * adjoint(w);
    const EigenSystem e = hermitian_eigen(h);
    EXPECT_LE(unitarity_defect(e.vectors), 4e-12);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e.values[i], d[i], 1e-12);
    const auto clusters = cluster_eigenvalues(e.values, 1e-8);
    ASSERT_EQ(clusters.size(), 2u);
    EXPECT_EQ(clusters[1].first, 1u);
    EXPECT_EQ(clusters[1].count, 3u);
}

TEST(MinGap, Examples) {
    EXPECT_TRUE(std::isinf(min_gap({1.0})));
    EXPECT_DOUBLE_EQ(min_gap({0.0, 3.0, 3.5}), 0.5);
}

TEST(OverlapMatrix, SameBasisIsIdentity) {
    RandomStream rng(21);
    const EigenSystem e = hermitian_eigen(testing::random_hermitian(4, rng));
    EXPECT_LE(max_abs_diff(overlap_matrix(e, e), ComplexMatrix::identity(4)), 1e-12);
}

TEST(OverlapMatrix, PermutedStandardBasisIsPermutationMatrix) {
    const std::vector<std::size_t> sigma{2, 0, 3, 1};
    const ComplexMatrix id = ComplexMatrix::identity(4);
    std::vector<ComplexVector> cols;
    for (std::size_t j : sigma) cols.push_back(id.column(j));
    const ComplexMatrix m = overlap_matrix(id, ComplexMatrix::from_columns(cols));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m(i, j), Complex(sigma[j] == i ? 1.0 : 0.0));
}

TEST(OverlapMatrix, LinearInFirstArgument) {
    const ComplexMatrix g{{kI}};
    const ComplexMatrix h{{1.0}};
    EXPECT_EQ(overlap_matrix(g, h)(0, 0), kI);
    EXPECT_EQ(overlap_matrix(h, g)(0, 0), -kI);
}

TEST(OverlapMatrix, UnitaryForOrthonormalBases) {
    RandomStream rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const EigenSystem g = hermitian_eigen(testing::random_hermitian(n, rng));
        const EigenSystem h = hermitian_eigen(testing::random_hermitian(n, rng));
        EXPECT_LE(unitarity_defect(overlap_matrix(g, h)), 1e-10 * n);
    }
}

TEST(ExpmSkewHermitian, ZeroGivesIdentity) {
    EXPECT_LE(max_abs_diff(expm_skew_hermitian(ComplexMatrix(3)), ComplexMatrix::identity(3)), 1e-15);
}

TEST(ExpmSkewHermitian, PlanarRotation) {
    for (double theta : {0.1, 1.0, 2.5, -3.0}) {
        const ComplexMatrix r = expm_skew_hermitian(ComplexMatrix{{0.0, theta}, {-theta, 0.0}});
        const ComplexMatrix expected{{std::cos(theta), std::sin(theta)}, {-std::sin(theta), std::cos(theta)}};
        EXPECT_LE(max_abs_diff(r, expected), 1e-13) << theta;
    }
}

TEST(ExpmSkewHermitian, MatchesTaylorOracleAndIsUnitary) {
    RandomStream rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const ComplexMatrix g = sample_ginibre(n, rng);
        const ComplexMatrix s = 0.5 * (g - adjoint(g));
        const ComplexMatrix u = expm_skew_hermitian(s);
        EXPECT_LE(unitarity_defect(u), 1e-10 * n);
        EXPECT_LE(max_abs_diff(u, testing::expm_taylor(s)), 1e-10);
        const ComplexMatrix back = u * expm_skew_hermitian(-1.0 * s);
        EXPECT_LE(frobenius_norm(back - ComplexMatrix::identity(n)), 1e-9 * n);
    }
}

TEST(ExpmSkewHermitian, RejectsNonSkew) {
    EXPECT_EQ(code_of([] { (void)expm_skew_hermitian(ComplexMatrix::identity(2)); }),
              ErrorCode::NotSkewHermitian);
}

TEST(CompleteToUnitary, FirstColumnIsPreserved) {
    RandomStream rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;
        ComplexVector v = sample_ginibre(n, rng).column(0);
        v *= 1.0 / v.norm();
        const std::vector<ComplexVector> cols{v};
        const ComplexMatrix w = complete_to_unitary(cols, n);
        EXPECT_LE(unitarity_defect(w), 1e-12 * n);
        EXPECT_LE((w.column(0) - v).norm(), 1e-14);
    }
}

TEST(DirectSumAndBlocks, RoundTrip) {
    const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const ComplexMatrix b{{kI}};
    const ComplexMatrix d = direct_sum(a, b);
    EXPECT_EQ(d.dim(), 3u);
    EXPECT_EQ(principal_block(d, 0, 2), a);
    EXPECT_EQ(principal_block(d, 2, 1), b);
    EXPECT_EQ(d(0, 2), Complex(0.0));
}

TEST(Defects, Examples) {
    const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_DOUBLE_EQ(symmetry_defect(jordan), kSqrt2);
    EXPECT_GT(normality_defect(jordan), 0.1);
    EXPECT_EQ(hermitian_defect(ComplexMatrix::identity(3)), 0.0);
    EXPECT_EQ(unitarity_defect(ComplexMatrix::identity(3)), 0.0);
}

TEST(CartesianDecompose, JordanParts) {
    const Complex a(0.3, 0.8);
    const auto pair = cartesian_decompose(fixtures::jordan_with_parameter(a));
    const ComplexMatrix ea{{0.0, 0.5, 0.0}, {0.5, 0.0, a / 2.0}, {0.0, std::conj(a) / 2.0, 0.0}};
    const ComplexMatrix eb{{0.0, -kI / 2.0, 0.0},
                           {kI / 2.0, 0.0, -kI * a / 2.0},
                           {0.0, kI * std::conj(a) / 2.0, 0.0}};
    EXPECT_LE(max_abs_diff(pair.a, ea), 1e-16);
    EXPECT_LE(max_abs_diff(pair.b, eb), 1e-16);
}

TEST(CartesianDecompose, HermitianAndSkewInputs) {
    RandomStream rng(51);
    const ComplexMatrix h = testing::random_hermitian(4, rng);
    auto p = cartesian_decompose(h);
    EXPECT_LE(max_abs_diff(p.a, h), 1e-15);
    EXPECT_LE(frobenius_norm(p.b), 1e-15);
    p = cartesian_decompose(kI * h);
    EXPECT_LE(frobenius_norm(p.a), 1e-15);
    EXPECT_LE(max_abs_diff(p.b, h), 1e-15);
}

TEST(CartesianDecompose, PartsAreExactlyHermitianAndReconstruct) {
    RandomStream rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix t = sample_ginibre(1 + trial % 6, rng);
        const auto p = cartesian_decompose(t);
        EXPECT_EQ(p.a, adjoint(p.a));
        EXPECT_EQ(p.b, adjoint(p.b));
        EXPECT_LE(frobenius_norm(p.a + kI * p.b - t), 1e-14 * std::max(1.0, frobenius_norm(t)));
    }
}

}  // namespace
}  // namespace uecsm
