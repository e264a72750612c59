#include "uecsm/fixtures.hpp"

#include <cmath>

namespace uecsm::fixtures {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

}  // namespace

ComplexMatrix jordan_with_parameter(Complex a) {
    return {{0.0, 1.0, 0.0}, {0.0, 0.0, a}, {0.0, 0.0, 0.0}};
}

ComplexMatrix worked_example() {
    return {
        {Complex(1, 4), Complex(-2, -1) * kSqrt2, Complex(-1, -4)},
        {Complex(0, kSqrt2), 0.0, Complex(0, kSqrt2)},
        {-1.0, Complex(2, -1) * kSqrt2, 1.0},
    };
}

Certificate worked_example_reference_certificate() {
    // Closed-form eigenvectors g_i of A and h_1 of B; g_1 and g_3 are
    // rotated so that <g_i, h_1> is real, then all are normalized.
    const ComplexVector g1{Complex(-1, -2 * kSqrt2), Complex(2, kSqrt2), 3.0};
    const ComplexVector g2{1.0, Complex(0, -kSqrt2), 1.0};
    const ComplexVector g3{Complex(-1, 2 * kSqrt2), Complex(-2, kSqrt2), 3.0};
    const ComplexVector h1{-1.0 - 2.0 / kSqrt3, Complex(0, std::sqrt(2.0 / 3.0)), 1.0};
    const Complex m11 = inner(g1, h1);
    const Complex m31 = inner(g3, h1);
    const ComplexVector e1 = (std::abs(m11) / m11 / g1.norm()) * g1;
    const ComplexVector e2 = (1.0 / g2.norm()) * g2;
    const ComplexVector e3 = (std::abs(m31) / m31 / g3.norm()) * g3;
    const std::vector<ComplexVector> cols{e1, e2, e3};

    Certificate c;
    c.u = ComplexMatrix::from_columns(cols);
    const Complex ir2(0, -1.0 / kSqrt2);
    c.k = {{0.5, ir2, -0.5}, {ir2, 0.0, ir2}, {-0.5, ir2, 0.5}};
    c.s = ComplexMatrix{{Complex(1 + kSqrt2, 1), Complex(0, -1), Complex(0, 1)},
                        {Complex(0, -1), -1.0, Complex(0, -1)},
                        {Complex(0, 1), Complex(0, -1), Complex(1 - kSqrt2, 1)}};
    c.s *= 2.0;
    c.residuals = compute_residuals(worked_example(), c.u, c.k, c.s);
    return c;
}

ComplexMatrix triangular_uecsm() { return {{0.0, 7.0, 0.0}, {0.0, 1.0, -5.0}, {0.0, 0.0, 6.0}}; }

ComplexMatrix triangular_not_uecsm() { return {{0.0, 7.0, 0.0}, {0.0, 1.0, -5.0}, {0.0, 0.0, 3.0}}; }

ComplexMatrix triangular_reference_kernel() {
    const Complex w(19.0, -6.0 * std::sqrt(74.0));
    return {
        {6.0 * -w / 3025.0, 42.0 * w / 3025.0, 7.0 / 605.0 * w},
        {42.0 * w / 3025.0, 19.0 * -w / 3025.0, 6.0 / 605.0 * w},
        {7.0 / 605.0 * w, 6.0 / 605.0 * w, 6.0 / 605.0 * -w},
    };
}

ComplexMatrix triangular_reference_form() {
    const double off = 35.0 * std::sqrt(55.0) / 74.0;
    const double im = std::sqrt(37.0 / 2.0);
    return {
        {Complex(56.0 / 37.0, -im), -55.0 / 37.0, off},
        {-55.0 / 37.0, Complex(56.0 / 37.0, im), off},
        {off, off, 147.0 / 37.0},
    };
}

std::vector<NamedFixture> all() {
    return {
        {"jordan", "[[0,1,0],[0,0,a],[0,0,0]] with a = 2 (not UECSM; UECSM iff |a| = 1)",
         jordan_with_parameter(2.0)},
        {"jordan-unimodular", "[[0,1,0],[0,0,a],[0,0,0]] with a = 1 (UECSM)", jordan_with_parameter(1.0)},
        {"worked", "3x3 matrix with radical entries, UECSM with a reference certificate",
         worked_example()},
        {"triangular-yes", "[[0,7,0],[0,1,-5],[0,0,6]] (UECSM)", triangular_uecsm()},
        {"triangular-no", "[[0,7,0],[0,1,-5],[0,0,3]] (not UECSM)", triangular_not_uecsm()},
    };
}

}  // namespace uecsm::fixtures
