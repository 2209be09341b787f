#pragma once

#include <ostream>

namespace permdek {

/// Exit codes: 0 success, 1 domain failure (e.g. the permutation is not
/// stackable), 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Applies PERMDEK_LOG (trace|debug|info|warn|error|off) to the stderr
/// logger. Default is warn.
void configure_logging();

}  // namespace permdek
