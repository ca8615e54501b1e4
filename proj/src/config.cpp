#include "fourman/config.hpp"

#include "fourman/error.hpp"

#include <fstream>
#include <sstream>

namespace fourman {

namespace {

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

GeographyConfig parse_config(std::string_view text, GeographyConfig base)
{
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty())
      continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("expected key=value", line, 1);
    std::string key = trim(std::string_view(s).substr(0, eq));
    std::string value = trim(std::string_view(s).substr(eq + 1));
    int col = static_cast<int>(eq) + 2;
    if (key == "c") {
      auto v = parse_rational(value);
      if (!v || *v < 0)
        throw SyntaxError("c must be a nonnegative rational", line, col);
      base.c = *v;
    } else if (key == "n0" || key == "n1") {
      auto v = parse_integer(value);
      if (!v || *v < 0)
        throw SyntaxError(key + " must be a nonnegative integer", line, col);
      (key == "n0" ? base.n0 : base.n1) = *v;
    } else {
      throw SyntaxError("unknown key '" + key + "'", line, 1);
    }
  }
  return base;
}

GeographyConfig load_config(const std::string& path, GeographyConfig base)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidExpr, "cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), base);
}

std::string print_config(const GeographyConfig& config)
{
  return "c=" + to_string(config.c) + "\nn0=" + to_string(config.n0) + "\nn1=" + to_string(config.n1) + "\n";
}

} // namespace fourman
