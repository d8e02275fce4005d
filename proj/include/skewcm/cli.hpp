#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewcm::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace skewcm::cli
