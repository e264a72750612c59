#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "uecsm/campaign.hpp"
#include "uecsm/certificate.hpp"
#include "uecsm/tolerances.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm::cli {

/// Everything `test` / `certify` print: the input, the verdict (with the
/// certificate when requested) and the tolerances in force.
struct Report {
    ComplexMatrix input;
    Verdict verdict;
    Tolerances tolerances;

    friend bool operator==(const Report&, const Report&) = default;
};

[[nodiscard]] nlohmann::json tolerances_to_json(const Tolerances& t);
[[nodiscard]] Tolerances tolerances_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json residuals_to_json(const Residuals& r);
[[nodiscard]] Residuals residuals_from_json(const nlohmann::json& j);

/// {"U": matrix, "K": matrix, "S": matrix, "residuals": {...}}
[[nodiscard]] nlohmann::json certificate_to_json(const Certificate& c);
/// Accepts a bare certificate or a report object holding one under
/// "certificate". Throws InputError.
[[nodiscard]] Certificate certificate_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json report_to_json(const Report& r);
[[nodiscard]] Report report_from_json(const nlohmann::json& j);
[[nodiscard]] std::string report_to_text(const Report& r);

[[nodiscard]] std::string verification_to_text(const VerificationReport& v);
[[nodiscard]] nlohmann::json verification_to_json(const VerificationReport& v);

[[nodiscard]] nlohmann::json stats_to_json(const CampaignStats& s, const CampaignConfig& cfg);
[[nodiscard]] std::string stats_to_text(const CampaignStats& s, const CampaignConfig& cfg);

}  // namespace uecsm::cli
