#include "uecsm/decide.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "uecsm/errors.hpp"
#include "uecsm/linalg.hpp"

namespace uecsm {

namespace {

double scale_of(const ComplexMatrix& x) { return std::max(1.0, frobenius_norm(x)); }

struct Borderline {
    bool flagged = false;
    void note(double measure, double threshold) noexcept {
        flagged = flagged || is_borderline(measure, threshold);
    }
};

struct Measures {
    double normal = 0.0;    // ||TT* - T*T|| / ||T||^2
    double gap_a = 0.0;     // relative min eigenvalue gap
    double gap_b = 0.0;
    double parallel = 1.0;  // 1 - max |<g_i, h_j>|
    std::size_t par_i = 0;
    std::size_t par_j = 0;
};

Measures measure(const ComplexMatrix& t, const CartesianPair& pair, const EigenSystem& eig_a,
                 const EigenSystem& eig_b) {
    Measures ms;
    const double tn = frobenius_norm(t);
    ms.normal = tn > 0.0 ? normality_defect(t) / (tn * tn) : 0.0;
    ms.gap_a = min_gap(eig_a.values) / scale_of(pair.a);
    ms.gap_b = min_gap(eig_b.values) / scale_of(pair.b);
    const ComplexMatrix m = overlap_matrix(eig_a, eig_b);
    double best = -1.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (const double a = std::abs(m(i, j)); a > best) {
                best = a;
                ms.par_i = i;
                ms.par_j = j;
            }
    ms.parallel = std::max(0.0, 1.0 - best);
    return ms;
}

void note_all(Borderline& bl, const Measures& ms, const Tolerances& tol, std::size_t n) {
    bl.note(ms.normal, tol.normal);
    bl.note(ms.gap_a, tol.eig_gap);
    bl.note(ms.gap_b, tol.eig_gap);
    if (n == 3) bl.note(ms.parallel, tol.parallel);
}

Verdict make_verdict(Status status, Branch branch, double measure, double threshold) {
    Verdict v;
    v.status = status;
    v.branch = branch;
    v.measure = measure;
    v.threshold = threshold;
    v.margin = measure - threshold;
    return v;
}

Verdict affirm(Branch branch, double measure, double threshold, Certificate cert) {
    Verdict v = make_verdict(Status::UECSM, branch, measure, threshold);
    v.certificate = std::move(cert);
    return v;
}

// Keeps the verdict only if its certificate verifies.
bool certified(const ComplexMatrix& t, const Verdict& v, const Tolerances& tol) {
    return v.certificate && verify_certificate(t, *v.certificate, tol).pass;
}

std::optional<Verdict> scan(const ComplexMatrix& t, const EigenSystem& eig_a, const EigenSystem& eig_b,
                            const Measures& ms, const Tolerances& tol, std::string& skipped) {
    const std::size_t n = t.dim();
    try {
        if (ms.normal <= tol.normal) {
            return affirm(Branch::Normal, ms.normal, tol.normal, certify_normal(t, tol));
        }
        if (n != 3) return std::nullopt;

        if (std::min(ms.gap_a, ms.gap_b) <= tol.eig_gap) {
            const bool use_b = ms.gap_b <= ms.gap_a;
            const EigenSystem& es = use_b ? eig_b : eig_a;
            std::size_t k = 1;
            for (std::size_t i = 2; i < es.values.size(); ++i)
                if (es.values[i] - es.values[i - 1] < es.values[k] - es.values[k - 1]) k = i;
            const double lambda = 0.5 * (es.values[k] + es.values[k - 1]);
            return affirm(Branch::RepeatedEigenvalue, std::min(ms.gap_a, ms.gap_b), tol.eig_gap,
                          certify_repeated_eigenvalue(t, use_b ? CartesianPart::B : CartesianPart::A,
                                                      lambda, tol));
        }
        if (ms.parallel <= tol.parallel) {
            return affirm(Branch::SharedEigenvector, ms.parallel, tol.parallel,
                          certify_shared_eigenvector(t, eig_a.vector(ms.par_i), tol));
        }
    } catch (const Error& e) {
        skipped = e.what();
    }
    return std::nullopt;
}

Verdict trivial(const ComplexMatrix& t) {
    return affirm(Branch::Trivial, 0.0, 0.0, make_certificate(t, ComplexMatrix::identity(t.dim())));
}

void require_finite(const ComplexMatrix& t) {
    if (!t.is_finite()) throw Error(ErrorCode::NonFinite, "input matrix has NaN or Inf entries");
}

// Branch MultipleZeros: more than one zero overlap forces a common
// eigenvector at n = 3. A row with two zeros points at g_i, a column with
// two zeros at h_j.
std::optional<Verdict> multiple_zeros(const ComplexMatrix& t, const EigenSystem& eig_a,
                                      const EigenSystem& eig_b, const ComplexMatrix& m,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& zeros,
                                      const Tolerances& tol) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> row_count(n, 0);
    std::vector<std::size_t> col_count(n, 0);
    for (const auto& [i, j] : zeros) {
        ++row_count[i];
        ++col_count[j];
    }
    ComplexVector shared;
    for (std::size_t i = 0; i < n && shared.size() == 0; ++i)
        if (row_count[i] >= 2) shared = eig_a.vector(i);
    for (std::size_t j = 0; j < n && shared.size() == 0; ++j)
        if (col_count[j] >= 2) shared = eig_b.vector(j);
    if (shared.size() == 0) {
        std::size_t bi = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (std::abs(m(i, j)) > std::abs(m(bi / n, bi % n))) bi = i * n + j;
        shared = eig_a.vector(bi / n);
    }
    std::vector<double> mags;
    for (const auto& [i, j] : zeros) mags.push_back(std::abs(m(i, j)));
    std::sort(mags.begin(), mags.end());
    try {
        Verdict v = affirm(Branch::MultipleZeros, mags[1], tol.zero,
                           certify_shared_eigenvector(t, shared, tol));
        if (certified(t, v, tol)) return v;
    } catch (const Error&) {
    }
    return std::nullopt;
}

Verdict inconclusive(Branch branch, double measure, double threshold, std::string reason) {
    Verdict v = make_verdict(Status::Inconclusive, branch, measure, threshold);
    v.reason = std::move(reason);
    return v;
}

}  // namespace

std::optional<Verdict> shortcut_scan(const ComplexMatrix& t, const CartesianPair& pair,
                                     const EigenSystem& eig_a, const EigenSystem& eig_b,
                                     const Tolerances& tol) {
    const Measures ms = measure(t, pair, eig_a, eig_b);
    std::string skipped;
    std::optional<Verdict> v = scan(t, eig_a, eig_b, ms, tol, skipped);
    if (v) {
        Borderline bl;
        note_all(bl, ms, tol, t.dim());
        v->borderline = bl.flagged;
    }
    return v;
}

Verdict test_with_bases(const ComplexMatrix& t, const EigenSystem& eig_a, const EigenSystem& eig_b,
                        const Tolerances& tol, bool necessary) {
    const ComplexMatrix m = overlap_matrix(eig_a, eig_b);
    Borderline bl;
    for (const auto& z : m.entries()) bl.note(std::abs(z), tol.zero);

    ProperPair pp;
    try {
        pp = make_proper(m, tol);
    } catch (const Error& e) {
        Verdict v = inconclusive(Branch::RealityTest, 0.0, tol.zero, "no proper pair: " + std::string(e.what()));
        v.borderline = bl.flagged;
        return v;
    }
    const RealityResult rr = reality_test(pp.apply(m), tol);
    bl.note(rr.measure, tol.real);

    Verdict v;
    if (rr.pass) {
        v = affirm(Branch::RealityTest, rr.measure, tol.real, build_certificate(t, eig_a, pp, m, tol));
        if (!certified(t, v, tol)) {
            v = inconclusive(Branch::RealityTest, rr.measure, tol.real,
                             "ratio test passed but the certificate failed verification");
        }
    } else if (necessary) {
        v = make_verdict(Status::NotUECSM, Branch::RealityTest, rr.measure, tol.real);
        v.witness = rr.witness;
        v.witness_ratio = rr.witness_ratio;
    } else {
        v = inconclusive(Branch::RealityTest, rr.measure, tol.real,
                         "ratio test failed but the spectra of A and B are not simple");
        v.witness = rr.witness;
        v.witness_ratio = rr.witness_ratio;
    }
    v.borderline = bl.flagged;
    return v;
}

Verdict test_3x3(const ComplexMatrix& t, const Tolerances& tol) {
    if (t.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "test_3x3 needs n = 3");
    require_finite(t);
    const CartesianPair pair = cartesian_decompose(t);
    const EigenSystem eig_a = hermitian_eigen(pair.a, tol.hermitian);
    const EigenSystem eig_b = hermitian_eigen(pair.b, tol.hermitian);
    const Measures ms = measure(t, pair, eig_a, eig_b);
    Borderline bl;
    note_all(bl, ms, tol, 3);

    std::string skipped;
    if (auto v = scan(t, eig_a, eig_b, ms, tol, skipped); v && certified(t, *v, tol)) {
        v->borderline = bl.flagged;
        return *v;
    }

    const ComplexMatrix m = overlap_matrix(eig_a, eig_b);
    if (const auto zeros = zero_entries(m, tol); zeros.size() > 1) {
        if (auto v = multiple_zeros(t, eig_a, eig_b, m, zeros, tol)) {
            v->borderline = bl.flagged;
            return *v;
        }
    }

    const bool simple = ms.gap_a > tol.eig_gap && ms.gap_b > tol.eig_gap;
    Verdict v = test_with_bases(t, eig_a, eig_b, tol, simple);
    v.borderline = v.borderline || bl.flagged;
    if (v.status == Status::Inconclusive && !skipped.empty()) v.reason += "; shortcut skipped: " + skipped;
    return v;
}

Verdict test_generic(const ComplexMatrix& t, const Tolerances& tol) {
    const std::size_t n = t.dim();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
    require_finite(t);
    if (n == 1) return trivial(t);
    if (n == 2) {
        Verdict v = affirm(Branch::TwoByTwo, 0.0, 0.0, certify_2x2(t, tol));
        if (!certified(t, v, tol)) {
            return inconclusive(Branch::TwoByTwo, 0.0, 0.0, "2x2 certificate failed verification");
        }
        return v;
    }
    if (n == 3) return test_3x3(t, tol);

    const CartesianPair pair = cartesian_decompose(t);
    const EigenSystem eig_a = hermitian_eigen(pair.a, tol.hermitian);
    const EigenSystem eig_b = hermitian_eigen(pair.b, tol.hermitian);
    const Measures ms = measure(t, pair, eig_a, eig_b);
    Borderline bl;
    note_all(bl, ms, tol, n);

    std::string skipped;
    if (auto v = scan(t, eig_a, eig_b, ms, tol, skipped); v && certified(t, *v, tol)) {
        v->borderline = bl.flagged;
        return *v;
    }
    const double gap = std::min(ms.gap_a, ms.gap_b);
    if (gap <= tol.eig_gap) {
        Verdict v = inconclusive(Branch::RepeatedEigenvalue, gap, tol.eig_gap,
                                 "A or B has a repeated eigenvalue; the ratio test is only sufficient");
        v.borderline = bl.flagged;
        return v;
    }
    Verdict v = test_with_bases(t, eig_a, eig_b, tol, true);
    v.borderline = v.borderline || bl.flagged;
    return v;
}

}  // namespace uecsm
