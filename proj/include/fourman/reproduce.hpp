#pragma once

#include "fourman/certificate.hpp"
#include "fourman/geography.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fourman {

struct ReproduceResult {
  std::string text;
  bool ok = true;
  std::vector<std::pair<std::string, Certificate>> certificates;
};

const std::vector<std::string>& reproduce_targets();

/// Recomputes every number of a published construction and compares it with the
/// stated value. Throws UnsupportedPattern for unknown targets.
ReproduceResult reproduce(const std::string& target, const GeographyConfig& config = {});

} // namespace fourman
