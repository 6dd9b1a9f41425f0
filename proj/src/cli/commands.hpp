#pragma once

#include <iosfwd>

namespace passeval::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kSelectorError = 3;
inline constexpr int kEmptyWork = 4;

inline constexpr const char* kVersion = "0.1.0";

// Environment variable naming a configuration file, used when --config is absent.
inline constexpr const char* kConfigEnv = "PASSEVAL_CONFIG";

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace passeval::cli
