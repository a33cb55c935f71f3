#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opprank {

/// Resolve the data directory: $OPPRANK_DATA_DIR, else the source-tree
/// data/ directory compiled into the binary.
std::string default_data_dir();

/// Run one CLI invocation (args exclude the program name).  Output streams
/// are injectable so tests can capture reports.
/// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error,
/// 3 budget exhausted.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace opprank
