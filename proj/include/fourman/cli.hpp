#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourman {

/// Exit codes: 0 success, 1 negative verdict (Hitchin-Thorpe violated, not
/// homeomorphic), 2 usage or input error, 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fourman
