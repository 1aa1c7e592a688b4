#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubetight::cli {

/// Runs one invocation (args excludes the program name). Exit status: 0 on
/// success, 2 on input errors (JSON object on err), 1 on consistency errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubetight::cli
