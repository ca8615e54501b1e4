#include "fourman/flags.hpp"

#include "fourman/error.hpp"

namespace fourman {

std::string_view to_string(Tri v)
{
  switch (v) {
  case Tri::yes: return "yes";
  case Tri::no: return "no";
  default: return "unknown";
  }
}

std::string_view to_string(Parity v)
{
  switch (v) {
  case Parity::even: return "even";
  case Parity::odd: return "odd";
  default: return "unknown";
  }
}

std::string_view to_string(W2Type v)
{
  switch (v) {
  case W2Type::I: return "I";
  case W2Type::II: return "II";
  case W2Type::III: return "III";
  default: return "unknown";
  }
}

std::string StructureFlags::citation(const std::string& field) const
{
  auto it = provenance.find(field);
  return it == provenance.end() ? std::string() : it->second;
}

namespace {

[[noreturn]] void inconsistent(const std::string& what)
{
  throw Error(ErrorKind::InconsistentFlags, what);
}

bool set_tri(StructureFlags& f, const std::string& field, Tri& slot, Tri value, const std::string& citation)
{
  if (slot == value)
    return false;
  if (slot != Tri::unknown)
    inconsistent(field + " is declared " + std::string(to_string(slot)) + " but " + citation + " forces " +
                 std::string(to_string(value)));
  slot = value;
  f.cite(field, citation);
  return true;
}

bool set_parity(StructureFlags& f, Parity value, const std::string& citation)
{
  if (f.parity == value)
    return false;
  if (f.parity != Parity::unknown)
    inconsistent("parity is declared " + std::string(to_string(f.parity)) + " but " + citation + " forces " +
                 std::string(to_string(value)));
  f.parity = value;
  f.cite("parity", citation);
  return true;
}

bool set_w2(StructureFlags& f, W2Type value, const std::string& citation)
{
  if (f.w2type == value)
    return false;
  if (f.w2type != W2Type::unknown)
    inconsistent("w2-type is declared " + std::string(to_string(f.w2type)) + " but " + citation + " forces " +
                 std::string(to_string(value)));
  f.w2type = value;
  f.cite("w2type", citation);
  return true;
}

} // namespace

void settle(StructureFlags& flags, const std::string& field, Tri& slot, Tri value, const std::string& citation)
{
  set_tri(flags, field, slot, value, citation);
}

void complete_flags(const InvariantRecord& rec, StructureFlags& f)
{
  const bool tau16 = divides(16, rec.tau);
  auto order = f.pi1.finite_order();

  if (f.w2type == W2Type::II)
    set_tri(f, "spin", f.spin, Tri::yes, "w2-type II means w2 = 0");
  if (f.w2type == W2Type::I || f.w2type == W2Type::III)
    set_tri(f, "spin", f.spin, Tri::no, "w2-types I and III are non-spin");
  if (f.w2type == W2Type::I)
    set_tri(f, "cover_spin", f.cover_spin, Tri::no, "w2-type I: universal cover non-spin");
  if (f.w2type == W2Type::III)
    set_tri(f, "cover_spin", f.cover_spin, Tri::yes, "w2-type III: universal cover spin");

  bool changed = true;
  while (changed) {
    changed = false;
    if (f.spin == Tri::yes && rec.b1 == 0 && !tau16)
      inconsistent("declared spin with b1 = 0 and tau = " + to_string(rec.tau) + " not 0 mod 16 (Rohlin)");
    if (rec.b1 == 0 && !tau16)
      changed |= set_tri(f, "spin", f.spin, Tri::no, "Rohlin: b1 = 0 and tau not 0 mod 16");

    if (f.pi1.is_trivial()) {
      if (f.spin != Tri::unknown)
        changed |= set_tri(f, "cover_spin", f.cover_spin, f.spin, "simply connected: universal cover is itself");
      if (f.cover_spin != Tri::unknown)
        changed |= set_tri(f, "spin", f.spin, f.cover_spin, "simply connected: universal cover is itself");
    }
    if (f.spin == Tri::yes)
      changed |= set_tri(f, "cover_spin", f.cover_spin, Tri::yes, "spin structures lift to covers");
    if (f.cover_spin == Tri::no)
      changed |= set_tri(f, "spin", f.spin, Tri::no, "universal cover non-spin");
    if (order && rec.b1 == 0 && !divides(16, *order * rec.tau))
      changed |= set_tri(f, "cover_spin", f.cover_spin, Tri::no,
                         "Rohlin on the universal cover: " + to_string(*order) + "*tau not 0 mod 16");

    if (f.spin == Tri::yes)
      changed |= set_parity(f, Parity::even, "spin implies even intersection form");
    if (!divides(8, rec.tau))
      changed |= set_parity(f, Parity::odd, "even unimodular forms have tau = 0 mod 8");
    if (f.pi1.has_odd_order()) {
      if (f.spin == Tri::no)
        changed |= set_parity(f, Parity::odd, "Gompf: no 2-torsion in H1, non-spin implies odd form");
      if (f.parity == Parity::even)
        changed |= set_tri(f, "spin", f.spin, Tri::yes, "Gompf: no 2-torsion in H1, even form implies spin");
    }
    if (f.spin == Tri::yes && f.parity == Parity::odd)
      inconsistent("spin with odd intersection form");
  }

  if (f.spin == Tri::yes)
    set_w2(f, W2Type::II, "w2 = 0");
  else if (f.spin == Tri::no && f.cover_spin == Tri::no)
    set_w2(f, W2Type::I, "non-spin with non-spin universal cover");
  else if (f.spin == Tri::no && f.cover_spin == Tri::yes)
    set_w2(f, W2Type::III, "non-spin with spin universal cover");
}

} // namespace fourman
