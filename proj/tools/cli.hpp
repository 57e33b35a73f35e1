#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlab::cli {

// Exit codes: 0 ok, 1 property violation found, 2 usage error, 3 digit
// budget exhausted (an unknown answer surfaced in the result).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ordlab::cli
