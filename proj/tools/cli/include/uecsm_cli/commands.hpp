#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uecsm/verdict.hpp"

namespace uecsm::cli {

inline constexpr int kExitUecsm = 0;
inline constexpr int kExitNotUecsm = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitInternal = 70;

[[nodiscard]] int exit_code_for(Status s) noexcept;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace uecsm::cli
