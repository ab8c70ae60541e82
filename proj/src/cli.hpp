#pragma once

#include <iosfwd>

namespace diagalg::cli {

/// Runs the command line; returns 0 on success, 1 on a failed verification, 2 on a
/// parse or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diagalg::cli
