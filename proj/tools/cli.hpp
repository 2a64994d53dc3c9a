#pragma once

namespace dirichlet::cli {

/// Entry point behind the `dirichlet` executable.
/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace dirichlet::cli
