#pragma once

#include "fourman/evaluate.hpp"

#include <vector>

namespace fourman {

struct WeightedPart {
  Evaluation eval;
  Integer multiplicity = 1;
};

/// chi = sum chi_i - 2(k-1), tau and b1 additive, k the total part count.
Evaluation connected_sum(const std::vector<WeightedPart>& parts);

/// Symplectic sum along genus-g surfaces of self-intersection zero:
/// chi = chi_L + chi_R - 2(2-2g), tau additive.
Evaluation fiber_sum(const Evaluation& left, const Evaluation& right, const Integer& genus);

/// Log transform of multiplicity j on an elliptic fiber; j = 1 returns the input.
Expr log_transform(const Expr& expr, const Integer& multiplicity,
                   const PrimitiveRegistry& registry = default_registry());
Evaluation log_transform(const Evaluation& inner, const Integer& multiplicity);

/// Universal cover for the supported patterns: Quotient(N,d) -> N,
/// Sd(d) -> (d-1)(S2xS2), and sums with a single cyclic summand.
Expr universal_cover(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

} // namespace fourman
