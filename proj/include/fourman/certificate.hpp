#pragma once

#include "fourman/numeric.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fourman {

struct Step {
  std::string rule;
  std::string citation;
  std::string arithmetic;  // relations separated by ';', all must hold
};

struct Certificate {
  std::string verdict;
  std::vector<Step> steps;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<std::string> assumptions;

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
};

struct CheckResult {
  bool ok = true;
  std::size_t failed_step = 0;
  std::string message;
};

/// Evaluates an arithmetic line: integers, rationals, + - * /, floor(), mod(),
/// gcd(), abs(), identifiers resolved as dotted paths into `inputs`, and the
/// relations = != < <= > >= (chainable), clauses separated by ';'.
bool check_arithmetic(std::string_view line, const nlohmann::json& inputs, std::string* error = nullptr);

/// JSON value for an exact number: native integer when it fits, else a string.
nlohmann::json json_number(const Integer& v);
nlohmann::json json_number(const Rational& v);

/// Independent re-evaluation of every step from the echoed inputs.
CheckResult verify_certificate(const Certificate& cert);

} // namespace fourman
