#pragma once

namespace uecsm {

/// Numerical thresholds for every decision the pipeline makes. Relative
/// quantities are scaled by max(1, ||X||_F) of the matrix involved.
struct Tolerances {
    double eig_gap = 1e-8;    // repeated-eigenvalue detection (relative)
    double zero = 1e-10;      // |<g_i,h_j>| below this is a zero entry
    double real = 1e-8;       // |Im q| / (1 + |q|) for the ratio test
    double parallel = 1e-10;  // 1 - |<g,h>| below this means parallel
    double normal = 1e-12;    // ||TT* - T*T||_F / ||T||_F^2
    double hermitian = 1e-10; // eigensolver input check

    // Certificate acceptance.
    double cert_unitary = 1e-9;    // times n: U unitary, K symmetric and involutive
    double cert_symmetric = 1e-8;  // times max(1, ||T||_F): S symmetric, T = CT*C

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// A decision is borderline when its measure lies within a factor of this
/// of its threshold.
inline constexpr double kBorderlineFactor = 10.0;

[[nodiscard]] constexpr bool is_borderline(double measure, double threshold) noexcept {
    return measure >= threshold / kBorderlineFactor && measure <= threshold * kBorderlineFactor;
}

}  // namespace uecsm
