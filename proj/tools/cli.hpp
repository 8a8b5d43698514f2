#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quiveralg {

/// Runs one command line. Exit status: 0 success, 1 a check failed,
/// 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiveralg
