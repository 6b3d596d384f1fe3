#pragma once

#include <ostream>

namespace garside_cli {

/// Runs the command line `argv[0..argc)` writing results to `out` and
/// diagnostics to `err`. Returns the process exit status: 0 on success, 2 for
/// usage or input errors, 3 when a search budget ran out, 4 for
/// mathematically invalid requests, 1 for anything unexpected.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace garside_cli
