#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "uecsm/tolerances.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

enum class Ensemble { PartialIsometry, Ginibre, Unitary };

std::string_view to_string(Ensemble e) noexcept;
std::optional<Ensemble> parse_ensemble(std::string_view s) noexcept;

struct CampaignConfig {
    std::size_t n = 4;
    std::size_t rank = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 1;
    Tolerances tolerances{};
    Ensemble ensemble = Ensemble::PartialIsometry;
    unsigned workers = 1;
};

/// Histogram of decision measures: bin 0 holds measure < 1e-18 (including
/// 0), bin k in 1..20 holds [1e(k-19), 1e(k-18)), bin 21 holds >= 1e2.
inline constexpr std::size_t kHistogramBins = 22;
[[nodiscard]] std::size_t histogram_bin(double measure) noexcept;

struct CampaignStats {
    std::uint64_t trials = 0;
    std::array<std::uint64_t, kStatusCount> status_counts{};
    std::array<std::uint64_t, kBranchCount> branch_counts{};
    std::array<std::uint64_t, kHistogramBins> histogram{};
    std::uint64_t borderline = 0;
    std::map<std::string, std::uint64_t> inconclusive_reasons;
    double elapsed_seconds = 0.0;

    [[nodiscard]] std::uint64_t count(Status s) const noexcept {
        return status_counts[static_cast<std::size_t>(s)];
    }
    [[nodiscard]] std::uint64_t count(Branch b) const noexcept {
        return branch_counts[static_cast<std::size_t>(b)];
    }

    void record(const Verdict& v);
    void merge(const CampaignStats& other);

    /// Equality of everything except wall time.
    [[nodiscard]] bool same_counts(const CampaignStats& other) const noexcept;
};

/// Throws PreconditionViolated for invalid configs (rank > n, trials = 0, n = 0).
[[nodiscard]] CampaignStats run_campaign(const CampaignConfig& cfg);

}  // namespace uecsm
