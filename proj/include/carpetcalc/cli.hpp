#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carpetcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Runs `carpetcalc <cohomology|carpet|sweep|join|lattice> [args] [--format json|text|tsv] [--out PATH]`.
/// `args` excludes the program name. Output goes to `out` unless --out is
/// given; diagnostics go to `err`. `color` enables ANSI styling of text output
/// on `out` (never applied to files).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, bool color = false);

/// Styling is on for terminals unless CARPETCALC_NO_COLOR is set (to anything).
bool color_enabled(const char *no_color_env, bool stdout_is_tty);

} // namespace carpetcalc::cli
