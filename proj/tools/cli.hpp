#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvdsp {

namespace exit_code {
inline constexpr int ok = 0;         ///< success, or "yes"
inline constexpr int no = 1;         ///< infeasible target or failed verification
inline constexpr int usage = 2;      ///< bad arguments or unreadable input
inline constexpr int exhausted = 3;  ///< iteration, ℓ or enumeration budget ran out
} // namespace exit_code

/// Runs one `mvdsp` command. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mvdsp
