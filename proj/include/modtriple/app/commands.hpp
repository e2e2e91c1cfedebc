#pragma once

#include <ostream>

namespace modtriple {

// Exit codes: 0 affirmative or success, 1 negative verdict, 2 error or unsupported.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modtriple
