#pragma once

#include <iosfwd>

namespace grafts {

/// graftool entry point. Exit codes: 0 success or property true, 1 property
/// false or verification failed, 2 input or capacity error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grafts
