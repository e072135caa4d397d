#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infoq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the directory that relative --out paths are
/// resolved against.
inline constexpr const char* kOutputDirEnv = "INFOQ_OUTPUT_DIR";

/// Runs one command line (args excludes the program name). Reports go to
/// out (or the --out file), diagnostics and error records to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoq::cli
