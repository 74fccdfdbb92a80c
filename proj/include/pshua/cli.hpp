#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace pshua {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_usage = 2, exit_capacity = 3, exit_audit_failure = 4 };

// Runs one subcommand. `args` excludes the program name.
int command_suite(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal form.
std::string format_double(double x);
// "4+0i", "-1.5-0.25i"
std::string format_complex(std::complex<double> z);

}  // namespace pshua
