#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dpfib {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

/// Runs the dpfib command line. `args` excludes the program name.
/// Returns kExitOk or kExitUsage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses seed lists such as "1..100", "7" or "1..10,20,30..32".
/// Throws std::invalid_argument on malformed input.
std::vector<std::uint64_t> parse_seed_list(const std::string& spec);

}  // namespace dpfib
