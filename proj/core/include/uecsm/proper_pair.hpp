#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "uecsm/matrix.hpp"
#include "uecsm/tolerances.hpp"

namespace uecsm {

/// Reordering and unimodular rephasing of two eigenbases. Applied to an
/// overlap matrix M it yields M'(i,j) = w_i conj(z_j) M(row_perm[i], col_perm[j]),
/// i.e. g'_i = w_i g_{row_perm[i]} and h'_j = z_j h_{col_perm[j]}.
struct ProperPair {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    std::vector<Complex> row_phases;
    std::vector<Complex> col_phases;

    [[nodiscard]] static ProperPair identity(std::size_t n);
    [[nodiscard]] ComplexMatrix apply(const ComplexMatrix& m) const;
};

/// Chooses the pivot (i, j) maximising the smallest modulus over row i and
/// column j (ties go to the earliest pivot in row-major order), moves it to
/// (0, 0) and rotates row 0 so the pivot is real positive. Entries of M are
/// assumed to be overlaps of unit vectors. Throws CannotMakeProper when every
/// pivot row/column pair contains an entry <= tol.zero.
[[nodiscard]] ProperPair make_proper(const ComplexMatrix& m, const Tolerances& tol);

/// Entries with |m_ij| <= tol.zero.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> zero_entries(
    const ComplexMatrix& m, const Tolerances& tol);

struct RealityResult {
    bool pass = false;
    double measure = 0.0;  // max |Im q_ij| / (1 + |q_ij|)
    double margin = 0.0;   // measure - tol.real
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::optional<Complex> witness_ratio;
};

/// q_ij = m_ij / (m_i1 m_1j) must be real for all i, j >= 2 (1-based).
/// Throws ZeroDenominator if row 0 or column 0 holds a zero entry.
[[nodiscard]] RealityResult reality_test(const ComplexMatrix& mp, const Tolerances& tol);

/// m_ij m_11 / (m_i1 m_1j): invariant under unimodular rescaling of either basis.
[[nodiscard]] Complex cross_ratio(const ComplexMatrix& m, std::size_t i, std::size_t j);

}  // namespace uecsm
