#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macloops::cli {

// Runs one command-line request against the provided streams and returns the
// process exit code: 0 on success, 2 on parse/usage errors, 3 when a module
// precondition is violated (the error name goes to `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace macloops::cli
