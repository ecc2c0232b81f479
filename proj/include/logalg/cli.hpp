#pragma once

#include <iosfwd>

namespace logalg {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logalg
