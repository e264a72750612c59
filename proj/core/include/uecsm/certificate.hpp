#pragma once

#include "uecsm/cartesian.hpp"
#include "uecsm/eigen.hpp"
#include "uecsm/matrix.hpp"
#include "uecsm/proper_pair.hpp"
#include "uecsm/tolerances.hpp"

namespace uecsm {

/// Frobenius residuals backing a certificate.
struct Residuals {
    double unitarity = 0.0;          // ||U*U - I||
    double kernel_symmetry = 0.0;    // ||K - K^t||
    double involution = 0.0;         // ||K conj(K) - I||
    double form_symmetry = 0.0;      // ||S - S^t||
    double c_symmetry = 0.0;         // ||K T^t conj(K) - T||
    double kernel_consistency = 0.0; // ||K - U U^t||
    double form_consistency = 0.0;   // ||S - U* T U||

    friend bool operator==(const Residuals&, const Residuals&) = default;
};

/// Explicit witness that T is UECSM: the conjugation is Cx = K conj(x) with
/// K = UU^t, and S = U*TU is complex symmetric.
struct Certificate {
    ComplexMatrix u;
    ComplexMatrix k;
    ComplexMatrix s;
    Residuals residuals;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerificationReport {
    Residuals residuals;
    double unitary_threshold = 0.0;    // applies to unitarity, kernel_*, involution
    double symmetric_threshold = 0.0;  // applies to form_*, c_symmetry
    bool pass = false;
};

[[nodiscard]] Residuals compute_residuals(const ComplexMatrix& t, const ComplexMatrix& u,
                                          const ComplexMatrix& k, const ComplexMatrix& s);

/// Recomputes every residual from (U, K, S); ignores the stored ones.
[[nodiscard]] VerificationReport verify_certificate(const ComplexMatrix& t,
                                                    const Certificate& cert,
                                                    const Tolerances& tol = {});

/// K = UU^t, S = U*TU and the residuals.
[[nodiscard]] Certificate make_certificate(const ComplexMatrix& t, ComplexMatrix u);

enum class CartesianPart { A, B };

/// T whose Cartesian part `which` has eigenvalue lambda of multiplicity at
/// least max(2, n - 1). Throws PreconditionViolated otherwise.
[[nodiscard]] Certificate certify_repeated_eigenvalue(const ComplexMatrix& t, CartesianPart which,
                                                      double lambda, const Tolerances& tol = {});

/// Splits off a common eigenvector of A and B and certifies the complement.
/// Throws NotSharedEigenvector if `shared` is not one.
[[nodiscard]] Certificate certify_shared_eigenvector(const ComplexMatrix& t,
                                                     const ComplexVector& shared,
                                                     const Tolerances& tol = {});

/// Total for n = 2. Throws DimensionMismatch otherwise.
[[nodiscard]] Certificate certify_2x2(const ComplexMatrix& t, const Tolerances& tol = {});

/// Simultaneous eigenbasis of the commuting parts of a normal T.
[[nodiscard]] Certificate certify_normal(const ComplexMatrix& t, const Tolerances& tol = {});

/// From a passing reality test: U's columns are the rephased, reordered
/// eigenvectors of A with every <e_i, f_1> real. Throws ZeroDenominator.
[[nodiscard]] Certificate build_certificate(const ComplexMatrix& t, const EigenSystem& eig_a,
                                            const ProperPair& pp, const ComplexMatrix& m,
                                            const Tolerances& tol = {});

}  // namespace uecsm
