#pragma once

#include <cstddef>
#include <vector>

#include "uecsm/matrix.hpp"

namespace uecsm {

/// Eigenvalues (ascending) and orthonormal eigenvector columns of a
/// Hermitian matrix.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }
    [[nodiscard]] ComplexVector vector(std::size_t i) const { return vectors.column(i); }
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 30;

/// Cyclic complex Jacobi. Each eigenvector is phased so its largest-modulus
/// entry is real positive. Throws NotHermitian / NoConvergence.
[[nodiscard]] EigenSystem hermitian_eigen(const ComplexMatrix& h,
                                          double tol = kDefaultHermitianTol);

/// M(i,j) = <g_i, h_j>.
[[nodiscard]] ComplexMatrix overlap_matrix(const EigenSystem& g, const EigenSystem& h);
[[nodiscard]] ComplexMatrix overlap_matrix(const ComplexMatrix& g, const ComplexMatrix& h);

/// Smallest gap between consecutive eigenvalues; +inf for n < 2.
[[nodiscard]] double min_gap(const std::vector<double>& values) noexcept;

struct EigenCluster {
    std::size_t first = 0;
    std::size_t count = 0;
};

/// Groups ascending eigenvalues whose consecutive gaps are <= abs_tol.
[[nodiscard]] std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& values,
                                                            double abs_tol);

}  // namespace uecsm
