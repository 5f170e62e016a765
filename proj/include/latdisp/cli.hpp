#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latdisp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;      // usage, validation or budget error
inline constexpr int kExitInvariant = 2;  // an invariant check failed

// Entry point of the latdisp command-line tool. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latdisp
