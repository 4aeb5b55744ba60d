#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab::cli {

/// Exit codes: 0 success and all verdicts pass; 1 a verdict failed or an
/// oracle diff is non-empty; 2 input or parse error; 3 bound exceeded.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_bound = 3;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab::cli
