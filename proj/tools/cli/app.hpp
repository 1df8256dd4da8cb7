#pragma once

#include <ostream>

namespace eaqecc::cli {

/// Parses the command line and dispatches. Returns the process exit code:
/// 0 success, 1 domain error (error JSON on `err`), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eaqecc::cli
