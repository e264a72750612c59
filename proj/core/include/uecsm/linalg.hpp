#pragma once

#include <span>

#include "uecsm/matrix.hpp"

namespace uecsm {

[[nodiscard]] ComplexMatrix adjoint(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix transpose(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix conjugate(const ComplexMatrix& m);

[[nodiscard]] double frobenius_norm(const ComplexMatrix& m) noexcept;

/// ||U*U - I||_F
[[nodiscard]] double unitarity_defect(const ComplexMatrix& u);
/// ||M - M*||_F
[[nodiscard]] double hermitian_defect(const ComplexMatrix& m);
/// ||M - M^t||_F
[[nodiscard]] double symmetry_defect(const ComplexMatrix& m);
/// ||TT* - T*T||_F
[[nodiscard]] double normality_defect(const ComplexMatrix& t);

/// Principal block of size `count` starting at (`offset`, `offset`).
[[nodiscard]] ComplexMatrix principal_block(const ComplexMatrix& m, std::size_t offset,
                                            std::size_t count);
[[nodiscard]] ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Extend orthonormal columns to a full unitary. The given columns are kept
/// verbatim as the leading columns; the rest come from Gram-Schmidt on the
/// standard basis, largest residual first.
[[nodiscard]] ComplexMatrix complete_to_unitary(std::span<const ComplexVector> columns,
                                                std::size_t n);

/// exp(S) for skew-Hermitian S, via the eigendecomposition of -iS.
[[nodiscard]] ComplexMatrix expm_skew_hermitian(const ComplexMatrix& s);

}  // namespace uecsm
