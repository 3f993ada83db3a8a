#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bvhnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Returns 0 on
/// success, 1 when a computation breaks an invariant or a diffed cell falls
/// outside tolerance, 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvhnet::cli
