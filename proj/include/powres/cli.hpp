#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powres::cli {

// Full command-line surface, callable in process for tests. args excludes
// the program name. Records go to out, diagnostics to err. Exit codes:
// 0 success, 1 usage error, 2 domain error, 3 oracle disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powres::cli
