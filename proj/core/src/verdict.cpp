#include "uecsm/verdict.hpp"

#include <array>

namespace uecsm {

namespace {

constexpr std::array<std::string_view, kStatusCount> kStatusNames{"UECSM", "NotUECSM", "Inconclusive"};
constexpr std::array<std::string_view, kBranchCount> kBranchNames{
    "Normal", "RepeatedEigenvalue", "SharedEigenvector", "MultipleZeros",
    "RealityTest", "TwoByTwo", "Trivial"};

}  // namespace

std::string_view to_string(Status s) noexcept { return kStatusNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(Branch b) noexcept { return kBranchNames[static_cast<std::size_t>(b)]; }

std::optional<Status> parse_status(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kStatusNames.size(); ++i)
        if (kStatusNames[i] == s) return static_cast<Status>(i);
    return std::nullopt;
}

std::optional<Branch> parse_branch(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kBranchNames.size(); ++i)
        if (kBranchNames[i] == s) return static_cast<Branch>(i);
    return std::nullopt;
}

}  // namespace uecsm
