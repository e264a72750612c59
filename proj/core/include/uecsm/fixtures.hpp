#pragma once

#include <string>
#include <vector>

#include "uecsm/certificate.hpp"
#include "uecsm/matrix.hpp"

namespace uecsm::fixtures {

/// [[0,1,0],[0,0,a],[0,0,0]]: UECSM iff |a| = 1.
ComplexMatrix jordan_with_parameter(Complex a);

/// The worked 3x3 example with radical entries (UECSM).
ComplexMatrix worked_example();

/// Reference certificate for worked_example(): U from the rephased,
/// normalized eigenvectors of A, and the closed-form K and S.
Certificate worked_example_reference_certificate();

/// Upper-triangular pair of which exactly one is UECSM.
ComplexMatrix triangular_uecsm();     // [[0,7,0],[0,1,-5],[0,0,6]]
ComplexMatrix triangular_not_uecsm(); // [[0,7,0],[0,1,-5],[0,0,3]]

/// Reference conjugation kernel and symmetric form for triangular_uecsm().
ComplexMatrix triangular_reference_kernel();
ComplexMatrix triangular_reference_form();

struct NamedFixture {
    std::string name;
    std::string description;
    ComplexMatrix matrix;
};

std::vector<NamedFixture> all();

}  // namespace uecsm::fixtures
