#pragma once

#include "fourman/certificate.hpp"
#include "fourman/expr.hpp"
#include "fourman/registry.hpp"

#include <string>
#include <vector>

namespace fourman {

struct RewriteRule {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::string guard;
  std::string citation;
  bool spin_mode = false;
};

/// R-A, R-B and the spin-mode decompositions, in default application order.
const std::vector<RewriteRule>& shipped_rules();

struct NormalizeOptions {
  std::vector<std::string> rule_order;  // empty: shipped order
  bool pick_last = false;                // which eligible summand R-B absorbs first
  Integer wall_n0 = 1;                   // S2xS2 copies X442 needs before it splits
};

struct TraceStep {
  std::string rule;
  std::string citation;
  std::string before;
  std::string after;
};

struct NormalForm {
  Expr form = connected_sum({});
  std::vector<TraceStep> trace;
  bool canonical = false;  // a CP2 # b CP2b, or p K3 # q S2xS2
  bool spin_mode = false;
};

/// Rewrites to a fixed point. Each step is checked to preserve chi, tau, b1 and spin.
NormalForm normalize(const Expr& expr, const NormalizeOptions& options = {},
                     const PrimitiveRegistry& registry = default_registry());

/// Mandelbaum-Moishezon: V # CP2 = X1 # X2 # 2g CP2 # (2g+n-1) CP2b.
struct MmSchema {
  Integer genus;
  Integer points;
  Integer cp2;
  Integer cp2b;
  std::string text;
  // chi(V) = chi(X1) + chi(X2) + chi_offset, forced by additivity of both sides
  Integer chi_offset;
  std::string tau_note;
};

MmSchema mm_rule(const Integer& genus, const Integer& points);

/// Homeomorphism-level agreement plus identical canonical forms.
Certificate verify_diffeo_claim(const Expr& lhs, const Expr& rhs, const NormalizeOptions& options = {},
                                const PrimitiveRegistry& registry = default_registry());

} // namespace fourman
