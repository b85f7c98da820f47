#pragma once
// Command-line driver. Subcommands: classify, check, lambda, verify-basis,
// verify-independence, selftest. Exit codes: 0 = all verdicts pass,
// 1 = failures found, 2 = usage error.

#include <ostream>
#include <string>
#include <vector>

namespace grlie {

/// args = argv[1..]; out gets reports, err gets diagnostics.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grlie
