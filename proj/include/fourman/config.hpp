#pragma once

#include "fourman/geography.hpp"

#include <string>
#include <string_view>

namespace fourman {

/// key=value lines for c, n0 and n1; '#' starts a comment. Unknown keys and
/// malformed values throw SyntaxError with the line number.
GeographyConfig parse_config(std::string_view text, GeographyConfig base = {});
GeographyConfig load_config(const std::string& path, GeographyConfig base = {});

std::string print_config(const GeographyConfig& config);

} // namespace fourman
