#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vvmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Default output format when --format is absent ("json", "csv" or "table").
inline constexpr const char* kFormatEnvVar = "VVMF_FORMAT";

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vvmf::cli
