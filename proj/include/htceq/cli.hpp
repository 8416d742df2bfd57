#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htceq::cli {

inline constexpr int exit_ok = 0;
//! Not equivalent (sequiv) or unparsable input (parse).
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;
inline constexpr int exit_budget = 3;

//! Runs the command line `args` (without the program name).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace htceq::cli
