#pragma once

#include "fourman/flags.hpp"
#include "fourman/invariants.hpp"

#include <string>
#include <vector>

namespace fourman {

struct SwVerdict {
  Tri value = Tri::unknown;
  std::string rule;
  std::string citation;
};

/// R1/R2: Kaehler or symplectic blocks with b2+ > 1.
SwVerdict sw_block(const InvariantRecord& rec, const StructureFlags& flags);

/// Mod-2 refinement for symplectic blocks with b2+ > 1.
SwVerdict sw_mod2_block(const InvariantRecord& rec, const StructureFlags& flags);

struct SwPart {
  const InvariantRecord* record;
  const StructureFlags* flags;
  Integer multiplicity;
};

/// R3: one part with non-trivial invariant, every other part b2+ = 0.
/// R4: at least two parts (counted with multiplicity) with b2+ > 0.
SwVerdict sw_sum(const std::vector<SwPart>& parts);

} // namespace fourman
