#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilbcells::cli {

// Runs one command line (without the program name). Exit 0 on success,
// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hilbcells::cli
