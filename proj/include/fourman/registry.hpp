#pragma once

#include "fourman/expr.hpp"
#include "fourman/flags.hpp"
#include "fourman/invariants.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace fourman {

/// Embedded surface of self-intersection zero usable for a fiber sum.
struct Surface {
  Integer genus;
  bool simply_connected_complement = false;
  Integer kills = 0;  // H1 rank of the ambient killed when glued to a side with simply connected complement
  std::string tag;
};

struct Capabilities {
  std::vector<Surface> surfaces;
  bool elliptic_fiber = false;
  // pi1 once every surface with kills > 0 has been consumed
  std::optional<GroupLabel> pi1_when_exhausted;
};

struct PrimitiveEntry {
  InvariantRecord record;
  StructureFlags flags;
  Capabilities caps;
};

/// Built-in blocks plus user registrations. Registration happens at startup;
/// lookups are read-only afterwards.
class PrimitiveRegistry {
public:
  PrimitiveEntry lookup(const Primitive& prim) const;

  void register_primitive(const std::string& name, InvariantRecord rec, StructureFlags flags, Capabilities caps = {});

  bool contains(const std::string& name) const;
  static bool is_builtin(const std::string& name);

  void seal();
  bool sealed() const;

private:
  mutable std::mutex mutex_;
  std::map<std::string, PrimitiveEntry> user_;
  bool sealed_ = false;
};

PrimitiveRegistry& default_registry();

} // namespace fourman
