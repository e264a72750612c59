#include "uecsm/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "uecsm/errors.hpp"
#include "uecsm/linalg.hpp"

namespace uecsm {

namespace {

constexpr double kOffTarget = 1e-14;
constexpr double kOffAccept = 1e-8;

double off_diagonal_norm(const ComplexMatrix& a) noexcept {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary G = diag(1, conj(phase)) * [[c, s], [-s, c]]
// acting on coordinates p, q: a <- G* a G, v <- v G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;
    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex g00 = c;
    const Complex g01 = s;
    const Complex g10 = -s * std::conj(phase);
    const Complex g11 = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * g00 + akq * g10;
        a(k, q) = akp * g01 + akq * g11;
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * g00 + vkq * g10;
        v(k, q) = vkp * g01 + vkq * g11;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
        a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h, double tol) {
    if (!h.is_finite()) throw Error(ErrorCode::NonFinite, "hermitian_eigen input");
    const std::size_t n = h.dim();
    const double norm_h = frobenius_norm(h);
    const double scale = std::max(1.0, norm_h);
    if (hermitian_defect(h) > tol * scale) {
        throw Error(ErrorCode::NotHermitian, "||H - H*||_F exceeds tolerance");
    }

    ComplexMatrix a = 0.5 * (h + adjoint(h));
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    double off = off_diagonal_norm(a);
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off > kOffTarget * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        off = off_diagonal_norm(a);
    }
    if (off > kOffTarget * scale && off > kOffAccept * norm_h) {
        throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap reached");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        es.values[j] = a(src, src).real();
        ComplexVector col = v.column(src);
        std::size_t lead = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (std::abs(col[k]) > std::abs(col[lead])) lead = k;
        const double mag = std::abs(col[lead]);
        if (mag > 0.0) col *= std::conj(col[lead]) / mag;
        col *= 1.0 / col.norm();
        col[lead] = std::abs(col[lead]);
        es.vectors.set_column(j, col);
    }
    return es;
}

ComplexMatrix overlap_matrix(const ComplexMatrix& g, const ComplexMatrix& h) {
    if (g.dim() != h.dim()) throw Error(ErrorCode::DimensionMismatch, "overlap_matrix");
    const std::size_t n = g.dim();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) s += g(k, i) * std::conj(h(k, j));
            m(i, j) = s;
        }
    return m;
}

ComplexMatrix overlap_matrix(const EigenSystem& g, const EigenSystem& h) {
    return overlap_matrix(g.vectors, h.vectors);
}

double min_gap(const std::vector<double>& values) noexcept {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < values.size(); ++i) gap = std::min(gap, values[i] - values[i - 1]);
    return gap;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& values, double abs_tol) {
    std::vector<EigenCluster> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!out.empty() && values[i] - values[i - 1] <= abs_tol) {
            ++out.back().count;
        } else {
            out.push_back({i, 1});
        }
    }
    return out;
}

}  // namespace uecsm
