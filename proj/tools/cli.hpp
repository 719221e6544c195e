#pragma once

#include <ostream>

namespace causal_bgk::cli {

// Exit codes: 0 success, 1 negative verdict of a yes/no query, 2 usage,
// parse or contract errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace causal_bgk::cli
