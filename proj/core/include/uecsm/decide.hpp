#pragma once

#include <optional>

#include "uecsm/cartesian.hpp"
#include "uecsm/eigen.hpp"
#include "uecsm/tolerances.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

/// Cheap affirmative branches: Normal for any n; RepeatedEigenvalue and
/// SharedEigenvector for n = 3. Checked in that order. The returned verdict
/// carries a certificate, which the caller is expected to verify.
[[nodiscard]] std::optional<Verdict> shortcut_scan(const ComplexMatrix& t,
                                                   const CartesianPair& pair,
                                                   const EigenSystem& eig_a,
                                                   const EigenSystem& eig_b,
                                                   const Tolerances& tol = {});

/// Overlap, proper pair, ratio test and certificate for the given
/// eigenbases. `necessary` states whether a failing ratio test proves
/// NotUECSM (distinct eigenvalues) or only leaves the question open.
[[nodiscard]] Verdict test_with_bases(const ComplexMatrix& t, const EigenSystem& eig_a,
                                      const EigenSystem& eig_b, const Tolerances& tol = {},
                                      bool necessary = true);

/// Total decision for 3x3 input. Throws DimensionMismatch for other sizes.
[[nodiscard]] Verdict test_3x3(const ComplexMatrix& t, const Tolerances& tol = {});

/// Any n >= 1: trivial for n = 1, always UECSM for n = 2, total for n = 3,
/// and for n >= 4 decisive only when A and B have simple spectra and a
/// proper pair exists (Inconclusive otherwise).
[[nodiscard]] Verdict test_generic(const ComplexMatrix& t, const Tolerances& tol = {});

}  // namespace uecsm
