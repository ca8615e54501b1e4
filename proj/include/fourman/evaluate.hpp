#pragma once

#include "fourman/expr.hpp"
#include "fourman/flags.hpp"
#include "fourman/invariants.hpp"
#include "fourman/registry.hpp"

namespace fourman {

struct Evaluation {
  InvariantRecord record;
  StructureFlags flags;
  Capabilities caps;
};

/// Structural evaluation: exact invariants, inferred flags, remaining fiber-sum capabilities.
Evaluation evaluate(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

InvariantRecord eval_invariants(const Expr& expr, const PrimitiveRegistry& registry = default_registry());
StructureFlags infer_flags(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

} // namespace fourman
