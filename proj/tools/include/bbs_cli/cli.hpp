#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbs::cli {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on a mathematical negative (NotABasis, NotFlat, a non-member,
/// ...), 2 on usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbs::cli
