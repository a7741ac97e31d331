#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diracbrush {

// Exit codes: 0 ok, 1 i/o, 2 parse or parity, 3 domain, 4 numerical.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diracbrush
