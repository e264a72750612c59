#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "uecsm/certificate.hpp"

namespace uecsm {

enum class Status { UECSM, NotUECSM, Inconclusive };

enum class Branch {
    Normal,
    RepeatedEigenvalue,
    SharedEigenvector,
    MultipleZeros,
    RealityTest,
    TwoByTwo,
    Trivial,
};

inline constexpr std::size_t kStatusCount = 3;
inline constexpr std::size_t kBranchCount = 7;

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Branch b) noexcept;
std::optional<Status> parse_status(std::string_view s) noexcept;
std::optional<Branch> parse_branch(std::string_view s) noexcept;

/// Outcome of a decision. `measure` is the quantity the deciding test
/// compared against `threshold`; margin = measure - threshold. Witness
/// indices are 0-based positions in the properized overlap matrix.
struct Verdict {
    Status status = Status::Inconclusive;
    Branch branch = Branch::Trivial;
    double measure = 0.0;
    double threshold = 0.0;
    double margin = 0.0;
    bool borderline = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::optional<Complex> witness_ratio;
    std::optional<Certificate> certificate;
    std::string reason;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace uecsm
