#pragma once

// File formats, command dispatch and report emission for the leibhom tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leibhom/leibcore.hpp"

namespace leibhom::cli {

inline constexpr int kFormatVersion = 1;

enum ExitCode : int { kOk = 0, kVerdictFailure = 1, kInputError = 2, kInternalError = 3 };

struct ParsedAlgebra {
  LeibnizAlgebra algebra;  ///< always left convention
  Convention input_convention = Convention::left;
  std::vector<std::string> notices;
};

/// {"basis": [...], "convention": "left"|"right", "brackets": [{"left", "right", "value": {name: "p/q"}}]}
/// Throws ParseError on malformed input, AxiomError listing violating triples.
ParsedAlgebra parse_algebra_text(std::string_view text);
ParsedAlgebra parse_algebra(const std::string& path);

/// {"basis": [...], "left_action": [{"left": g, "right": m, "value": {...}}],
///  "right_action": [{"left": m, "right": g, "value": {...}}]}
/// given in the same convention as the algebra file.
Representation parse_representation_text(std::string_view text, const ParsedAlgebra& g);

/// {"basis": [...], "action": [{"left": g, "right": m, "value": {...}}]}; g
/// acts through g_Lie, so elements of g^ann must act by zero.
LieModule parse_lie_module_text(std::string_view text, const ParsedAlgebra& g);

nlohmann::json algebra_to_json(const LeibnizAlgebra& g);

struct Report {
  nlohmann::json json;  ///< command, input, tables, verdicts, timing
  std::string human;
  int exit_code = kOk;
};

std::string sha256_hex(std::string_view bytes);

/// Canonical JSON (sorted keys) to `path` ("-" for stdout) and the human
/// table to `out` unless quiet.
void emit_report(const Report& r, const std::optional<std::string>& path, bool quiet, std::ostream& out);

/// Entire command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leibhom::cli
