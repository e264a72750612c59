#include "uecsm/errors.hpp"

namespace uecsm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotSharedEigenvector: return "NotSharedEigenvector";
        case ErrorCode::CannotMakeProper: return "CannotMakeProper";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace uecsm
