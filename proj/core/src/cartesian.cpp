#include "uecsm/cartesian.hpp"

#include <complex>

namespace uecsm {

CartesianPair cartesian_decompose(const ComplexMatrix& t) {
    const std::size_t n = t.dim();
    CartesianPair pair{ComplexMatrix(n), ComplexMatrix(n)};
    // Fill the upper triangle and mirror, so A = A* and B = B* hold bit-exactly.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex tij = t(i, j);
            const Complex tji_bar = std::conj(t(j, i));
            const Complex a = 0.5 * (tij + tji_bar);
            const Complex b = Complex(0.0, -0.5) * (tij - tji_bar);
            if (i == j) {
                pair.a(i, i) = a.real();
                pair.b(i, i) = b.real();
            } else {
                pair.a(i, j) = a;
                pair.a(j, i) = std::conj(a);
                pair.b(i, j) = b;
                pair.b(j, i) = std::conj(b);
            }
        }
    }
    return pair;
}

}  // namespace uecsm
