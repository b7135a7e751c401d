#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gext::cli {

// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace gext::cli
