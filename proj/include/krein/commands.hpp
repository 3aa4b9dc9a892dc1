#pragma once

#include <ostream>
#include <string>

#include "krein/config.hpp"

namespace krein {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2 };

/// Runs verify | classify | weyl | resolvent-check | sweep. Results go to
/// cfg.out when set, otherwise to `out`; diagnostics go to `err`.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace krein
