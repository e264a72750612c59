#include "uecsm/proper_pair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "uecsm/errors.hpp"

namespace uecsm {

ProperPair ProperPair::identity(std::size_t n) {
    ProperPair pp;
    pp.row_perm.resize(n);
    pp.col_perm.resize(n);
    std::iota(pp.row_perm.begin(), pp.row_perm.end(), 0);
    std::iota(pp.col_perm.begin(), pp.col_perm.end(), 0);
    pp.row_phases.assign(n, 1.0);
    pp.col_phases.assign(n, 1.0);
    return pp;
}

ComplexMatrix ProperPair::apply(const ComplexMatrix& m) const {
    const std::size_t n = m.dim();
    if (row_perm.size() != n || col_perm.size() != n || row_phases.size() != n ||
        col_phases.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "ProperPair::apply");
    }
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = row_phases[i] * std::conj(col_phases[j]) * m(row_perm[i], col_perm[j]);
    return r;
}

namespace {

std::vector<std::size_t> pivot_first(std::size_t pivot, std::size_t n) {
    std::vector<std::size_t> perm{pivot};
    for (std::size_t k = 0; k < n; ++k)
        if (k != pivot) perm.push_back(k);
    return perm;
}

}  // namespace

ProperPair make_proper(const ComplexMatrix& m, const Tolerances& tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "make_proper on empty matrix");

    std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
    std::vector<double> col_min(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double a = std::abs(m(i, j));
            row_min[i] = std::min(row_min[i], a);
            col_min[j] = std::min(col_min[j], a);
        }

    std::size_t bi = 0;
    std::size_t bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double score = std::min(row_min[i], col_min[j]);
            if (score > best) {
                best = score;
                bi = i;
                bj = j;
            }
        }
    if (best <= tol.zero) {
        throw Error(ErrorCode::CannotMakeProper, "every pivot row/column contains a zero entry");
    }

    ProperPair pp = ProperPair::identity(n);
    pp.row_perm = pivot_first(bi, n);
    pp.col_perm = pivot_first(bj, n);
    const Complex pivot = m(bi, bj);
    pp.row_phases[0] = std::abs(pivot) / pivot;
    return pp;
}

std::vector<std::pair<std::size_t, std::size_t>> zero_entries(const ComplexMatrix& m,
                                                              const Tolerances& tol) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (std::abs(m(i, j)) <= tol.zero) out.emplace_back(i, j);
    return out;
}

RealityResult reality_test(const ComplexMatrix& mp, const Tolerances& tol) {
    const std::size_t n = mp.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(mp(k, 0)) <= tol.zero || std::abs(mp(0, k)) <= tol.zero) {
            throw Error(ErrorCode::ZeroDenominator, "first row or column of the overlap matrix has a zero");
        }
    }
    RealityResult r;
    double worst = 0.0;
    Complex worst_q{};
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            const Complex q = mp(i, j) / (mp(i, 0) * mp(0, j));
            const double score = std::abs(q.imag()) / (1.0 + std::abs(q));
            if (!r.witness || score > worst) {
                worst = score;
                worst_q = q;
                r.witness = std::pair{i, j};
            }
        }
    r.measure = worst;
    r.margin = worst - tol.real;
    r.pass = worst <= tol.real;
    if (r.pass) {
        r.witness.reset();
    } else {
        r.witness_ratio = worst_q;
    }
    return r;
}

Complex cross_ratio(const ComplexMatrix& m, std::size_t i, std::size_t j) {
    return m(i, j) * m(0, 0) / (m(i, 0) * m(0, j));
}

}  // namespace uecsm
