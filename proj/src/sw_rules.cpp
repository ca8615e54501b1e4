#include "fourman/sw_rules.hpp"

namespace fourman {

namespace {

bool b2plus_above(const InvariantRecord& rec, int bound)
{
  auto v = b2plus_int(rec);
  return v && *v > bound;
}

bool b2plus_zero(const InvariantRecord& rec)
{
  auto v = b2plus_int(rec);
  return v && *v == 0;
}

} // namespace

SwVerdict sw_block(const InvariantRecord& rec, const StructureFlags& flags)
{
  if (!b2plus_above(rec, 1))
    return {};
  if (flags.kahler == Tri::yes || flags.minimal_general_type == Tri::yes)
    return {Tri::yes, "R1", "Witten: Kaehler surfaces with b2+ > 1 have non-trivial Seiberg-Witten invariants"};
  if (flags.symplectic == Tri::yes)
    return {Tri::yes, "R2", "Taubes: symplectic manifolds with b2+ > 1 have non-trivial Seiberg-Witten invariants"};
  return {};
}

SwVerdict sw_mod2_block(const InvariantRecord& rec, const StructureFlags& flags)
{
  if (b2plus_above(rec, 1) && rec.b1 == 0 && (flags.symplectic == Tri::yes || flags.kahler == Tri::yes))
    return {Tri::yes, "R2", "Taubes: the canonical class has invariant 1, non-zero mod 2"};
  return {};
}

SwVerdict sw_sum(const std::vector<SwPart>& parts)
{
  Integer positive = 0;
  for (const auto& p : parts)
    if (b2plus_above(*p.record, 0))
      positive += p.multiplicity;
  if (positive >= 2)
    return {Tri::no, "R4", "Taubes: Seiberg-Witten invariants vanish on sums of two manifolds with b2+ > 0"};

  const SwPart* carrier = nullptr;
  for (const auto& p : parts) {
    if (b2plus_zero(*p.record)) {
      if (p.record->b1 != 0)
        return {};
      continue;
    }
    if (carrier || p.multiplicity != 1 || p.flags->sw_nontrivial != Tri::yes)
      return {};
    carrier = &p;
  }
  if (carrier)
    return {Tri::yes, "R3",
            "Kotschick-Morgan-Taubes: summing with b2+ = 0 manifolds keeps a non-trivial Seiberg-Witten invariant"};
  return {};
}

} // namespace fourman
