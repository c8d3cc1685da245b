#pragma once

#include <ostream>

namespace holoskew {

/// Runs one holoskew command. Returns 0 on success, 2 when the input or a
/// hypothesis is rejected, 1 on an internal invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holoskew
