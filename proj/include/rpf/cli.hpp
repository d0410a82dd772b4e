#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpf {

// Exit codes: 0 success/true, 1 false or failed suite, 2 usage error,
// 3 budget exhausted. RPF_BUDGET / RPL_BUDGET override the default
// iteration budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace rpf
