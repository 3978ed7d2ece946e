#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 = success and all asserted claims
// hold, 1 = a claim failed verification, 2 = usage or parse error.

namespace zcp {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload for tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zcp
