#pragma once

// The command layer behind the tautcalc executable and the Python module.
// Every command produces a deterministic JSON report, a human summary and
// an exit code: 0 for a pass or a derived result, 1 for a checked negative,
// 2 for a usage or input error.

#include "tautcalc/serialize.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tautcalc {

enum ExitCode : int { kExitPass = 0, kExitNegative = 1, kExitUsage = 2 };

struct CommandOutput {
    Json report;
    std::string text;
    int exit_code = kExitPass;
};

/// Bound for relation searches: explicit value, else TAUT_MAX_CODIM, else fallback.
/// Throws std::invalid_argument for a malformed environment value.
int resolve_bound(std::optional<int> explicit_bound, int fallback);

CommandOutput d_op_command(const std::string& expression, int times);
CommandOutput sl2_check_command(std::optional<int> max_codim);
CommandOutput relations_command(int genus, std::optional<int> max_codim);
CommandOutput check_w_command(int genus, std::optional<int> max_codim);
CommandOutput pullback_verify_command();
CommandOutput degeneration_check_command(int genus);

/// Full command line dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautcalc
