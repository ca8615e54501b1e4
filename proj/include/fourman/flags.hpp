#pragma once

#include "fourman/expr.hpp"
#include "fourman/invariants.hpp"

#include <map>
#include <string>
#include <vector>

namespace fourman {

enum class Tri { unknown, yes, no };
enum class Parity { unknown, even, odd };
enum class W2Type { unknown, I, II, III };

std::string_view to_string(Tri v);
std::string_view to_string(Parity v);
std::string_view to_string(W2Type v);

/// Tri-state structure annotations. Every non-unknown entry has a citation in
/// `provenance`, keyed by field name.
struct StructureFlags {
  Tri spin = Tri::unknown;
  Tri cover_spin = Tri::unknown;  // universal cover
  Parity parity = Parity::unknown;
  W2Type w2type = W2Type::unknown;
  GroupLabel pi1 = GroupLabel::unknown();
  Tri sw_nontrivial = Tri::unknown;
  Tri sw_mod2_nontrivial = Tri::unknown;
  Tri symplectic = Tri::unknown;
  Tri kahler = Tri::unknown;
  Tri minimal_general_type = Tri::unknown;
  Tri acd = Tri::unknown;
  bool complex_surface = false;   // chi_h is formal otherwise
  std::vector<std::string> labels;  // smooth-structure indices (log transforms, block labels)
  std::map<std::string, std::string> provenance;

  void cite(const std::string& field, std::string citation) { provenance[field] = std::move(citation); }
  std::string citation(const std::string& field) const;
};

/// Applies the derivation rules (Rohlin on the manifold and its universal
/// cover, parity from the signature and from odd-order pi1, w2-type) until
/// nothing changes. Throws InconsistentFlags on contradictions.
void complete_flags(const InvariantRecord& rec, StructureFlags& flags);

/// Sets `field` to `value` with a citation when still unknown; throws
/// InconsistentFlags when it is already set to a different value.
void settle(StructureFlags& flags, const std::string& field, Tri& slot, Tri value, const std::string& citation);

} // namespace fourman
