#include "uecsm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "uecsm/eigen.hpp"
#include "uecsm/errors.hpp"

namespace uecsm {

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(j, i) = m(i, j);
    return r;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(m(i, j));
    return r;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
    double s = 0.0;
    for (const auto& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double unitarity_defect(const ComplexMatrix& u) {
    return frobenius_norm(adjoint(u) * u - ComplexMatrix::identity(u.dim()));
}

double hermitian_defect(const ComplexMatrix& m) { return frobenius_norm(m - adjoint(m)); }

double symmetry_defect(const ComplexMatrix& m) { return frobenius_norm(m - transpose(m)); }

double normality_defect(const ComplexMatrix& t) {
    const ComplexMatrix ts = adjoint(t);
    return frobenius_norm(t * ts - ts * t);
}

ComplexMatrix principal_block(const ComplexMatrix& m, std::size_t offset, std::size_t count) {
    if (offset + count > m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "principal_block out of range");
    }
    ComplexMatrix r(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) r(i, j) = m(offset + i, offset + j);
    return r;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    ComplexMatrix r(na + b.dim());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r(na + i, na + j) = b(i, j);
    return r;
}

namespace {

// Two passes of classical Gram-Schmidt against the accepted basis.
ComplexVector orthogonalize(ComplexVector v, const std::vector<ComplexVector>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) v -= inner(v, q) * q;
    }
    return v;
}

}  // namespace

ComplexMatrix complete_to_unitary(std::span<const ComplexVector> columns, std::size_t n) {
    if (columns.size() > n) throw Error(ErrorCode::DimensionMismatch, "too many columns");
    std::vector<ComplexVector> basis(columns.begin(), columns.end());
    for (const auto& c : basis) {
        if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "column length");
    }
    std::vector<bool> used(n, false);
    while (basis.size() < n) {
        std::size_t best = n;
        double best_norm = -1.0;
        ComplexVector best_vec;
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            ComplexVector e(n);
            e[k] = 1.0;
            ComplexVector r = orthogonalize(std::move(e), basis);
            const double nr = r.norm();
            if (nr > best_norm) {
                best_norm = nr;
                best = k;
                best_vec = std::move(r);
            }
        }
        used[best] = true;
        best_vec *= 1.0 / best_norm;
        basis.push_back(std::move(best_vec));
    }
    return ComplexMatrix::from_columns(basis);
}

ComplexMatrix expm_skew_hermitian(const ComplexMatrix& s) {
    const double scale = std::max(1.0, frobenius_norm(s));
    if (frobenius_norm(s + adjoint(s)) > 1e-10 * scale) {
        throw Error(ErrorCode::NotSkewHermitian, "||S + S*||_F exceeds 1e-10 * max(1, ||S||_F)");
    }
    // -iS is Hermitian; exp(S) = exp(i(-iS)).
    const EigenSystem es = hermitian_eigen(-kI * s);
    const std::size_t n = s.dim();
    ComplexMatrix scaled = es.vectors;
    for (std::size_t j = 0; j < n; ++j) scaled.scale_column(j, std::polar(1.0, es.values[j]));
    return scaled * adjoint(es.vectors);
}

}  // namespace uecsm
