#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uecsm {

enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    DimensionMismatch,
    NotSkewHermitian,
    NonFinite,
    PreconditionViolated,
    NotSharedEigenvector,
    CannotMakeProper,
    ZeroDenominator,
    RankOutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace uecsm
