#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subdiv {

// args excludes the program name. Exit codes: 0 yes/success, 1 no,
// 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subdiv
