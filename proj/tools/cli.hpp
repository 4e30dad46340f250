#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weave::cli {

/// Runs one command line (without the program name). Exit codes: 0 ok,
/// 1 domain failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weave::cli
