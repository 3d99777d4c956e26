#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with string streams.
//
// Exit codes: 0 success, 1 usage or parse errors, 2 a law failed or a
// counterexample was found, 3 resource guard exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace reslat::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reslat::cli
