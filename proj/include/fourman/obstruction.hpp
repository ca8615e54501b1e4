#pragma once

#include "fourman/certificate.hpp"
#include "fourman/evaluate.hpp"
#include "fourman/sw_rules.hpp"

#include <optional>
#include <vector>

namespace fourman {

namespace verdict {
inline constexpr const char* einstein_obstructed = "einstein_obstructed";
inline constexpr const char* ht_ok = "hitchin_thorpe_ok";
inline constexpr const char* ht_violated = "hitchin_thorpe_violated";
inline constexpr const char* homeomorphic = "homeomorphic";
inline constexpr const char* not_homeomorphic = "not_homeomorphic";
inline constexpr const char* none = "no_verdict";
inline constexpr const char* diffeomorphic = "diffeomorphic_under_rewrite_axioms";
} // namespace verdict

/// 2 chi + 3 tau >= 0, 2 chi - 3 tau >= 0 and chi >= 0.
Certificate hitchin_thorpe(const InvariantRecord& rec);

SwVerdict sw_status(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

/// LeBrun: X # k CP2b # l(S1xS3) has no Einstein metric when X has non-trivial
/// Seiberg-Witten invariant, (2chi+3tau)(X) > 0 and k + 4l >= (2chi+3tau)(X)/3.
Certificate lebrun_einstein(const Expr& x, const Integer& k, const Integer& l,
                            const PrimitiveRegistry& registry = default_registry());

struct Split {
  Expr x;
  Integer k;
  Integer l;
};

/// Splittings of a connected sum into X # k CP2b # l(S1xS3) on which LeBrun's
/// obstruction fires, largest k + 4l first. Throws NoSplit when there is none.
std::vector<Split> decompose_for_obstruction(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

/// Ishida-LeBrun: four candidate pieces, the first m summed with N.
Certificate spin_einstein(const std::vector<Expr>& pieces, int m, const Expr& n,
                          const std::vector<std::string>& assumptions = {},
                          const PrimitiveRegistry& registry = default_registry());

/// LeBrun via decomposition, then Ishida-LeBrun via spin pieces, else no verdict.
Certificate check_einstein(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

struct HomeoKey {
  GroupLabel pi1;
  Integer b2plus;
  Integer b2minus;
  Parity parity;
  W2Type w2type;

  friend bool operator==(const HomeoKey&, const HomeoKey&) = default;
};

/// Throws UnknownFlag when parity or w2-type is unresolved, UnsupportedGroup
/// unless pi1 is trivial or finite cyclic.
HomeoKey homeo_key(const Expr& expr, const PrimitiveRegistry& registry = default_registry());

/// Hambleton-Kreck (Freedman for trivial pi1) comparison.
Certificate homeo_equal(const Expr& a, const Expr& b, const PrimitiveRegistry& registry = default_registry());

/// Extra Ishida-LeBrun piece making the b2+ sum 4 mod 8: K3 when possible, else E(4).
Expr default_fourth_piece(const Integer& b2plus_sum_of_three);

} // namespace fourman
