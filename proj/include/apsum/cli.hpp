#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace apsum {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command line (without the program name). Results go to `out` as
/// JSON lines; the run manifest goes to `err` unless --manifest names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the manifest's result digest.
std::uint64_t fnv1a64(std::string_view bytes);

const char* version();

}  // namespace apsum
