#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuskit {

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 success/consistent, 1 usage or input error, 2 theorem hypotheses not
/// applicable, 3 contradiction.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fuskit
