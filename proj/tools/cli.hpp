#pragma once

#include <iosfwd>

namespace kr::cli {

/// Runs the `kr` command line. Exit codes: 0 success, 1 a check failed or a
/// computation was aborted, 2 invalid input.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kr::cli
