#pragma once

// Command-line front end. The `sag` executable is a thin wrapper around
// run_cli so that every command can be driven from tests.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sag/asphericity.hpp"
#include "sag/zlinalg.hpp"

namespace sag {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNotAspherical = 3,
};

/// `Z`, `Z^r`, `Z/d`, `0`, or sums of those joined by `+`, whitespace
/// ignored. Throws SyntaxError.
FgAbelian parse_group_spec(std::string_view text);

nlohmann::json verdict_to_json(const FgAbelian& gamma, const AsphericityVerdict& v);
AsphericityVerdict verdict_from_json(const nlohmann::json& j);
std::string verdict_to_text(const FgAbelian& gamma, const AsphericityVerdict& v);
/// Inverse of verdict_to_text. Throws FormatError.
AsphericityVerdict verdict_from_text(std::string_view text);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sag
