#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qlogic::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented key/value rendering of a report.
std::string render_text(const nlohmann::json& report);

} // namespace qlogic::cli
