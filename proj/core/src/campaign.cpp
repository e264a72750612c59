#include "uecsm/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include "uecsm/decide.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/random.hpp"

namespace uecsm {

namespace {

constexpr std::array<std::string_view, 3> kEnsembleNames{"partial-isometry", "ginibre", "unitary"};

ComplexMatrix draw(const CampaignConfig& cfg, RandomStream& rng) {
    switch (cfg.ensemble) {
        case Ensemble::PartialIsometry: return sample_partial_isometry(cfg.n, cfg.rank, rng);
        case Ensemble::Ginibre: return sample_ginibre(cfg.n, rng);
        case Ensemble::Unitary: return sample_unitary(cfg.n, rng);
    }
    return {};
}

CampaignStats run_range(const CampaignConfig& cfg, std::uint64_t begin, std::uint64_t end) {
    CampaignStats stats;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        RandomStream rng(cfg.seed, trial);
        Verdict v;
        try {
            v = test_generic(draw(cfg, rng), cfg.tolerances);
        } catch (const Error& e) {
            v = Verdict{};
            v.status = Status::Inconclusive;
            v.reason = e.what();
        }
        stats.record(v);
    }
    return stats;
}

}  // namespace

std::string_view to_string(Ensemble e) noexcept { return kEnsembleNames[static_cast<std::size_t>(e)]; }

std::optional<Ensemble> parse_ensemble(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kEnsembleNames.size(); ++i)
        if (kEnsembleNames[i] == s) return static_cast<Ensemble>(i);
    return std::nullopt;
}

std::size_t histogram_bin(double measure) noexcept {
    if (!(measure >= 1e-18)) return 0;
    if (measure >= 1e2) return kHistogramBins - 1;
    const auto k = static_cast<long>(std::floor(std::log10(measure))) + 19;
    return static_cast<std::size_t>(std::clamp<long>(k, 1, static_cast<long>(kHistogramBins) - 2));
}

void CampaignStats::record(const Verdict& v) {
    ++trials;
    ++status_counts[static_cast<std::size_t>(v.status)];
    ++branch_counts[static_cast<std::size_t>(v.branch)];
    ++histogram[histogram_bin(v.measure)];
    if (v.borderline) ++borderline;
    if (v.status == Status::Inconclusive) ++inconclusive_reasons[v.reason];
}

void CampaignStats::merge(const CampaignStats& other) {
    trials += other.trials;
    for (std::size_t i = 0; i < kStatusCount; ++i) status_counts[i] += other.status_counts[i];
    for (std::size_t i = 0; i < kBranchCount; ++i) branch_counts[i] += other.branch_counts[i];
    for (std::size_t i = 0; i < kHistogramBins; ++i) histogram[i] += other.histogram[i];
    borderline += other.borderline;
    for (const auto& [reason, count] : other.inconclusive_reasons) inconclusive_reasons[reason] += count;
}

bool CampaignStats::same_counts(const CampaignStats& o) const noexcept {
    return trials == o.trials && status_counts == o.status_counts && branch_counts == o.branch_counts &&
           histogram == o.histogram && borderline == o.borderline &&
           inconclusive_reasons == o.inconclusive_reasons;
}

CampaignStats run_campaign(const CampaignConfig& cfg) {
    if (cfg.n == 0) throw Error(ErrorCode::PreconditionViolated, "n must be positive");
    if (cfg.trials == 0) throw Error(ErrorCode::PreconditionViolated, "trials must be positive");
    if (cfg.rank > cfg.n) throw Error(ErrorCode::RankOutOfRange, "rank exceeds n");

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t workers = std::clamp<std::uint64_t>(cfg.workers, 1, cfg.trials);
    CampaignStats total;
    if (workers == 1) {
        total = run_range(cfg, 0, cfg.trials);
    } else {
        std::vector<CampaignStats> parts(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(cfg.trials, w * chunk);
            const std::uint64_t end = std::min(cfg.trials, begin + chunk);
            pool.emplace_back([&cfg, &parts, w, begin, end] { parts[w] = run_range(cfg, begin, end); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts) total.merge(p);
    }
    total.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return total;
}

}  // namespace uecsm
