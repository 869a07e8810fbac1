#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bmssp/solver.hpp"

namespace bmssp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One JSON object per line, one line per recursion node.
std::string format_trace(const std::vector<TraceRecord>& trace);

}  // namespace bmssp
