#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besov {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// Runs the besov-rate command line; args excludes the program name.
int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besov
