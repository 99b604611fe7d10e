#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ega::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand, and writes
/// reports to `out` (or --out) and diagnostics to `err`.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

int main(int argc, char** argv);

} // namespace ega::cli
