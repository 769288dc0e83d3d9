#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit {

// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 domain error, 4 I/O error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zetakit
