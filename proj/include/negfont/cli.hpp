// cli.hpp
// Command-line front end: `gen`, `measure` and `check`.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error,
// 4 invalid state data.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace negfont {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitBadState = 4,
};

// Residuals above this make `check` exit with kExitCheckFailed.
inline constexpr double kCheckThreshold = 1e-8;

struct MeasureReport {
    std::string descriptor;  // state file path or generator spec
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
};

// Serializes a JSON value with 17 significant digits for every number, in
// insertion order, terminated by a newline.
std::string format_report(const nlohmann::ordered_json& report);

// Accepts "A".."J" or "1".."10"; returns the 1-based index or throws
// std::invalid_argument.
int parse_qubit(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negfont
