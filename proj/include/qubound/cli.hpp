#pragma once

// Command-line front end: `bounds` and `optimize` take a scenario file,
// `sweep` renders the spin-1 preset tables to CSV, `verify` runs the
// random-ensemble suite. Exit codes: 0 all satisfied / suite clean,
// 1 bound violation or suite failure, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "qubound/bounds.hpp"

namespace qubound {

/// 0 when every report is satisfied, 1 otherwise.
int bounds_exit_code(const std::vector<BoundReport>& reports);

/// Parse "start:stop:count" into an inclusive grid; count == 1 yields
/// {start}, and the last point is exactly stop. Throws
/// std::invalid_argument on malformed specs.
std::vector<double> parse_grid_spec(const std::string& spec);

/// Parse a comma-separated list of family names; "all" selects every
/// family in canonical order. Throws std::invalid_argument on unknown
/// names or empty entries.
std::vector<BoundFamily> parse_family_list(const std::string& csv);

/// Run the full CLI. argv follows main() conventions (argv[0] is the
/// program name). All human output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qubound
