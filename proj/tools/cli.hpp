#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cluster::cli {

// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cluster::cli
