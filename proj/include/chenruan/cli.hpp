#pragma once

#include "chenruan/cr_ring.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace chenruan {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2 };

/// Runs one CLI invocation (args exclude the program name).  Results go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class BettiFormat { Csv, Json, Latex };

/// CR Betti numbers of genus g in the given format.
std::string format_betti(int g, BettiFormat format);

}  // namespace chenruan
