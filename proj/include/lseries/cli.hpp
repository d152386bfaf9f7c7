// Command-line surface. run() is the whole program, parameterized over
// the streams so tests can drive it in-process and capture the output.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lseries::cli {

// args = argv[1..] in natural order (no program name). Exit codes:
//   0 success, 1 verification failure, 2 usage error,
//   3 expression parse/eval error
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace lseries::cli
