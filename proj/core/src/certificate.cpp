#include "uecsm/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "uecsm/decide.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/linalg.hpp"

namespace uecsm {

namespace {

double scale_of(const ComplexMatrix& x) { return std::max(1.0, frobenius_norm(x)); }

// Orthonormal basis of span(candidates) whose leading vectors are `seed`
// (assumed orthonormal and inside that span); picks the candidate with the
// largest residual at each step.
std::vector<ComplexVector> extend_basis(std::vector<ComplexVector> seed,
                                        const std::vector<ComplexVector>& candidates,
                                        std::size_t target) {
    std::vector<bool> used(candidates.size(), false);
    while (seed.size() < target) {
        double best_norm = -1.0;
        std::size_t best = 0;
        ComplexVector best_vec;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (used[c]) continue;
            ComplexVector r = candidates[c];
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : seed) r -= inner(r, q) * q;
            if (const double nr = r.norm(); nr > best_norm) {
                best_norm = nr;
                best = c;
                best_vec = std::move(r);
            }
        }
        used[best] = true;
        best_vec *= 1.0 / best_norm;
        seed.push_back(std::move(best_vec));
    }
    return seed;
}

ComplexMatrix certify_block(const ComplexMatrix& block, const Tolerances& tol) {
    switch (block.dim()) {
        case 0:
        case 1: return ComplexMatrix::identity(block.dim());
        case 2: return certify_2x2(block, tol).u;
        default: {
            Verdict v = test_generic(block, tol);
            if (v.status != Status::UECSM || !v.certificate) {
                throw Error(ErrorCode::PreconditionViolated, "complement block could not be certified");
            }
            return v.certificate->u;
        }
    }
}

}  // namespace

Residuals compute_residuals(const ComplexMatrix& t, const ComplexMatrix& u, const ComplexMatrix& k,
                            const ComplexMatrix& s) {
    const std::size_t n = t.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    Residuals r;
    r.unitarity = unitarity_defect(u);
    r.kernel_symmetry = symmetry_defect(k);
    r.involution = frobenius_norm(k * conjugate(k) - eye);
    r.form_symmetry = symmetry_defect(s);
    r.c_symmetry = frobenius_norm(k * transpose(t) * conjugate(k) - t);
    r.kernel_consistency = frobenius_norm(k - u * transpose(u));
    r.form_consistency = frobenius_norm(s - adjoint(u) * t * u);
    return r;
}

VerificationReport verify_certificate(const ComplexMatrix& t, const Certificate& cert,
                                      const Tolerances& tol) {
    VerificationReport rep;
    const std::size_t n = t.dim();
    rep.unitary_threshold = tol.cert_unitary * static_cast<double>(std::max<std::size_t>(n, 1));
    rep.symmetric_threshold = tol.cert_symmetric * scale_of(t);
    if (cert.u.dim() != n || cert.k.dim() != n || cert.s.dim() != n || !t.is_finite() ||
        !cert.u.is_finite() || !cert.k.is_finite() || !cert.s.is_finite()) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        rep.residuals = {inf, inf, inf, inf, inf, inf, inf};
        rep.pass = false;
        return rep;
    }
    rep.residuals = compute_residuals(t, cert.u, cert.k, cert.s);
    const Residuals& r = rep.residuals;
    rep.pass = r.unitarity <= rep.unitary_threshold && r.kernel_symmetry <= rep.unitary_threshold &&
               r.involution <= rep.unitary_threshold &&
               r.kernel_consistency <= rep.unitary_threshold &&
               r.form_symmetry <= rep.symmetric_threshold &&
               r.c_symmetry <= rep.symmetric_threshold &&
               r.form_consistency <= rep.symmetric_threshold;
    return rep;
}

Certificate make_certificate(const ComplexMatrix& t, ComplexMatrix u) {
    Certificate c;
    c.k = u * transpose(u);
    c.s = adjoint(u) * t * u;
    c.u = std::move(u);
    c.residuals = compute_residuals(t, c.u, c.k, c.s);
    return c;
}

Certificate certify_normal(const ComplexMatrix& t, const Tolerances& tol) {
    const CartesianPair pair = cartesian_decompose(t);
    const EigenSystem eig_a = hermitian_eigen(pair.a, tol.hermitian);
    const std::size_t n = t.dim();
    ComplexMatrix u(n);
    for (const auto& cl : cluster_eigenvalues(eig_a.values, tol.eig_gap * scale_of(pair.a))) {
        if (cl.count == 1) {
            u.set_column(cl.first, eig_a.vector(cl.first));
            continue;
        }
        // Re-diagonalize B inside the eigenspace: Q* B Q = W diag W*.
        std::vector<ComplexVector> q;
        for (std::size_t c = 0; c < cl.count; ++c) q.push_back(eig_a.vector(cl.first + c));
        ComplexMatrix bq(cl.count);
        for (std::size_t i = 0; i < cl.count; ++i)
            for (std::size_t j = 0; j < cl.count; ++j) bq(i, j) = inner(pair.b * q[j], q[i]);
        const EigenSystem eig_bq = hermitian_eigen(bq, std::max(tol.hermitian, 1e-8));
        for (std::size_t c = 0; c < cl.count; ++c) {
            ComplexVector col(n);
            for (std::size_t r = 0; r < cl.count; ++r) col += eig_bq.vectors(r, c) * q[r];
            u.set_column(cl.first + c, col);
        }
    }
    return make_certificate(t, std::move(u));
}

Certificate certify_2x2(const ComplexMatrix& t, const Tolerances& tol) {
    if (t.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "certify_2x2 needs n = 2");
    const double tn = frobenius_norm(t);
    if (normality_defect(t) <= tol.normal * tn * tn) return certify_normal(t, tol);

    const CartesianPair pair = cartesian_decompose(t);
    const EigenSystem eig_a = hermitian_eigen(pair.a, tol.hermitian);
    const EigenSystem eig_b = hermitian_eigen(pair.b, tol.hermitian);
    const ComplexVector f1 = eig_b.vector(0);
    ComplexMatrix u = eig_a.vectors;
    for (std::size_t i = 0; i < 2; ++i) {
        const Complex m = inner(u.column(i), f1);
        if (std::abs(m) > 0.0) u.scale_column(i, std::abs(m) / m);
    }
    return make_certificate(t, std::move(u));
}

Certificate certify_repeated_eigenvalue(const ComplexMatrix& t, CartesianPart which, double lambda,
                                        const Tolerances& tol) {
    if (which == CartesianPart::A) {
        // -iT = B + i(-A): the repeated part of A becomes the imaginary part.
        const Certificate rotated = certify_repeated_eigenvalue(-kI * t, CartesianPart::B, -lambda, tol);
        return make_certificate(t, rotated.u);
    }
    const std::size_t n = t.dim();
    if (n <= 1) return make_certificate(t, ComplexMatrix::identity(n));

    const CartesianPair pair = cartesian_decompose(t);
    const EigenSystem eig_b = hermitian_eigen(pair.b, tol.hermitian);
    const double gap_tol = tol.eig_gap * scale_of(pair.b);
    std::vector<std::size_t> outliers;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(eig_b.values[k] - lambda) > gap_tol) outliers.push_back(k);
    const std::size_t multiplicity = n - outliers.size();
    if (multiplicity < std::max<std::size_t>(2, n - 1)) {
        throw Error(ErrorCode::PreconditionViolated,
                    "eigenvalue multiplicity " + std::to_string(multiplicity) + " is below " +
                        std::to_string(std::max<std::size_t>(2, n - 1)));
    }

    const EigenSystem eig_a = hermitian_eigen(pair.a, tol.hermitian);
    if (outliers.empty()) {
        // B = lambda I, so T - i lambda I = A is Hermitian.
        return make_certificate(t, eig_a.vectors);
    }

    // B - lambda I = s w w*: choose eigenvectors e of A with <w, e> real >= 0.
    const ComplexVector w = eig_b.vector(outliers.front());
    std::vector<ComplexVector> columns;
    for (const auto& cl : cluster_eigenvalues(eig_a.values, tol.eig_gap * scale_of(pair.a))) {
        std::vector<ComplexVector> q;
        for (std::size_t c = 0; c < cl.count; ++c) q.push_back(eig_a.vector(cl.first + c));
        ComplexVector p(n);
        for (const auto& qc : q) p += inner(w, qc) * qc;
        std::vector<ComplexVector> seed;
        if (const double np = p.norm(); np > 1e-14) seed.push_back((1.0 / np) * p);
        for (auto& v : extend_basis(std::move(seed), q, cl.count)) columns.push_back(std::move(v));
    }
    return make_certificate(t, ComplexMatrix::from_columns(columns));
}

Certificate certify_shared_eigenvector(const ComplexMatrix& t, const ComplexVector& shared,
                                       const Tolerances& tol) {
    const std::size_t n = t.dim();
    if (shared.size() != n) throw Error(ErrorCode::DimensionMismatch, "shared eigenvector length");
    const double nv = shared.norm();
    if (!(nv > 0.0) || !shared.is_finite()) {
        throw Error(ErrorCode::NotSharedEigenvector, "zero or non-finite vector");
    }
    const ComplexVector v = (1.0 / nv) * shared;
    const CartesianPair pair = cartesian_decompose(t);
    const double residual_tol = std::max(10.0 * std::sqrt(std::max(0.0, tol.parallel)), tol.cert_symmetric);
    for (const ComplexMatrix* x : {&pair.a, &pair.b}) {
        const ComplexVector xv = *x * v;
        const Complex mu = inner(xv, v);
        if ((xv - mu * v).norm() > residual_tol * scale_of(*x)) {
            throw Error(ErrorCode::NotSharedEigenvector, "vector is not an eigenvector of both A and B");
        }
    }
    const std::vector<ComplexVector> lead{v};
    const ComplexMatrix w = complete_to_unitary(lead, n);
    const ComplexMatrix block = principal_block(adjoint(w) * t * w, 1, n - 1);
    const ComplexMatrix inner_u = certify_block(block, tol);
    return make_certificate(t, w * direct_sum(ComplexMatrix::identity(1), inner_u));
}

Certificate build_certificate(const ComplexMatrix& t, const EigenSystem& eig_a, const ProperPair& pp,
                              const ComplexMatrix& m, const Tolerances& tol) {
    const ComplexMatrix mp = pp.apply(m);
    const std::size_t n = t.dim();
    if (eig_a.dim() != n || mp.dim() != n) throw Error(ErrorCode::DimensionMismatch, "build_certificate");
    ComplexMatrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex mi1 = mp(i, 0);
        if (std::abs(mi1) <= tol.zero) {
            throw Error(ErrorCode::ZeroDenominator, "<g_i, h_1> vanishes");
        }
        ComplexVector g = eig_a.vector(pp.row_perm[i]);
        g *= pp.row_phases[i] * (std::abs(mi1) / mi1) / g.norm();
        u.set_column(i, g);
    }
    return make_certificate(t, std::move(u));
}

}  // namespace uecsm
