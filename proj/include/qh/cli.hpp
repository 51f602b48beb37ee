#pragma once

#include <iosfwd>

namespace qh::cli {

// Runs one qhtool command. Exit codes: 0 success, 1 a verification found a failure,
// 2 usage error or malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qh::cli
