#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hom3lie::cli {

/// Runs one command line (without the program name). The verdict goes to
/// `out`, usage errors to `err`. Returns the process exit code:
/// 0 all checks pass, 1 a check failed or a precondition was violated,
/// 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hom3lie::cli
