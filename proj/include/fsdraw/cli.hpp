#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsdraw::cli {

// Exit status: 0 ok, 1 invalid input, 2 certificate failure,
// 3 verification failure, 64 usage error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsdraw::cli
