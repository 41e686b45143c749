#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqtile::cli {

enum ExitCode : int {
  kOk = 0,          // valid / tilable / success
  kRefuted = 1,     // invalid / not tilable / contradiction found
  kInputError = 2,  // bad arguments, unreadable file, parse or schema error
  kAmbiguous = 3,   // generator enclosures too coarse to decide
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (text, or JSON with --format json); diagnostics go to `err`.
///
///   validate FILE
///   decide --width EXPR --height EXPR
///   verify FILE
///   construct (--ratio P/Q | --width EXPR --height EXPR) [--out FILE]
///   analyze-good --width EXPR --height EXPR --side EXPR...
///   render FILE [--precision N] [--out FILE]
///
/// Shared flags: --format text|json, --gen SYMBOL=[lo,hi] (repeatable),
/// --y Q (negative certificate parameter for decide/verify).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "SYMBOL=[lo,hi]". Throws sqtile::ParseError.
struct GenSpec {
  std::string symbol;
  std::string lo;
  std::string hi;
};
GenSpec parse_gen_flag(const std::string& text);

}  // namespace sqtile::cli
