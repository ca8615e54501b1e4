#pragma once

#include "fourman/expr.hpp"
#include "fourman/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fourman {

/// Euler characteristic of a smooth curve in the class (adjunction):
/// 2(p+q) - 2pq on CP1xCP1, 2 - (k-1)(k-2) on CP2.
Integer branch_curve_euler(const DivisorClass& cls);

InvariantRecord base_record(Base base);
/// First Chern class of the ground surface: O(3) or O(2,2).
DivisorClass base_c1(Base base);

/// d-cyclic cover branched along a smooth curve D in the class d*L:
/// c2 = d c2(Y) - (d-1) chi(D), c1^2 = d (c1(Y) - (d-1) L)^2.
InvariantRecord cyclic_cover_invariants(const InvariantRecord& base_rec, const DivisorClass& c1, const Integer& d,
                                        const DivisorClass& L);

/// Cover of CP2 or CP1xCP1 along a branch class that must be d-divisible.
InvariantRecord cyclic_cover_invariants(Base base, const Integer& d, const DivisorClass& branch);

/// Euler characteristic of the proper transform of D under a d-cover branched along C.
Integer proper_transform_euler(const Integer& d, const Integer& chi_d, const Integer& c_dot_d);

/// Closed form for the bi-cyclic cover of type (d,p) along (da,db) and (pm,pn).
InvariantRecord bicyclic_invariants(const Integer& d, const Integer& p, const Integer& a, const Integer& b,
                                    const Integer& m, const Integer& n);

struct Admissibility {
  bool pass = true;
  std::string check;  // offending gcd expression on failure
  Integer witness = 1;
};

/// gcd conditions for a free Z/d action on CP1xCP1 lifting to the cover.
Admissibility action_admissibility(const Integer& d, const Integer& a, const Integer& b, Action action);

/// Divides c2 and c1^2 by d; the quotient gets pi1 = Z/d.
InvariantRecord quotient_invariants(const InvariantRecord& inner, const Integer& d);

enum class AmpleMode { cover, quotient };

/// cover: (d-1)a + (p-1)m >= 3 and (d-1)b + (p-1)n >= 3.
/// quotient: (d-1)a + d(p-1)m > 2 and (d-1)b + d(p-1)n > 2, with (m,n) the quotient-level degrees.
bool ample_canonical(const Integer& d, const Integer& p, const Integer& a, const Integer& b, const Integer& m,
                     const Integer& n, AmpleMode mode = AmpleMode::cover);

/// Ampleness of K for a single cyclic cover: (d-1)L - c1(Y) positive in every degree.
bool ample_canonical(Base base, const Integer& d, const DivisorClass& branch);

/// Reason the bi-cyclic cover is non-spin: K.A'' is odd for A = pt x CP1 when
/// one degree is even, the other odd, and a matching branch degree is odd.
std::optional<std::string> bicyclic_nonspin_reason(const Integer& d, const Integer& p, const Integer& a,
                                                   const Integer& b, const Integer& m, const Integer& n);

struct PreconditionCheck {
  std::string name;
  bool pass = true;
  bool assumed = false;
  std::string citation;
  std::string detail;
};

struct CoverBlueprint {
  Expr spec;
  std::vector<PreconditionCheck> preconditions;

  bool constructible() const;
};

/// Precondition bundle for a CyclicCover, BicyclicCover or Quotient node.
CoverBlueprint cover_blueprint(const Expr& expr);

} // namespace fourman
