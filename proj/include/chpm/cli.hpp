#pragma once

#include <iosfwd>

namespace chpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Entry point of the chpm command line tool. Diagnostics go to `err`, failures
// as a one-line JSON object {"error": tag, "message": ...}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chpm::cli
