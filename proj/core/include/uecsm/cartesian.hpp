#pragma once

#include "uecsm/matrix.hpp"

namespace uecsm {

/// T = A + iB with A, B exactly Hermitian.
struct CartesianPair {
    ComplexMatrix a;
    ComplexMatrix b;
};

[[nodiscard]] CartesianPair cartesian_decompose(const ComplexMatrix& t);

}  // namespace uecsm
