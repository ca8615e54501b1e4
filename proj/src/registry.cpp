#include "fourman/registry.hpp"

#include "fourman/error.hpp"

#include <array>

namespace fourman {

namespace {

constexpr std::array<std::string_view, 14> builtin_names = {
  "CP2", "CP2b", "S2xS2", "K3", "S1xS3", "S4", "X442", "E", "Sd", "Xk", "XG", "Y", "FgProduct", "Sympl",
};

struct Decl {
  StructureFlags flags;
  std::string source;

  explicit Decl(std::string src) : source(std::move(src)) {}

  Decl& tri(const std::string& field, Tri StructureFlags::*slot, Tri value)
  {
    flags.*slot = value;
    flags.cite(field, source);
    return *this;
  }
  Decl& spin(Tri v) { return tri("spin", &StructureFlags::spin, v); }
  Decl& cover_spin(Tri v) { return tri("cover_spin", &StructureFlags::cover_spin, v); }
  Decl& symplectic(Tri v) { return tri("symplectic", &StructureFlags::symplectic, v); }
  Decl& kahler(Tri v) { return tri("kahler", &StructureFlags::kahler, v); }
  Decl& general_type(Tri v) { return tri("minimal_general_type", &StructureFlags::minimal_general_type, v); }
  Decl& acd(Tri v) { return tri("acd", &StructureFlags::acd, v); }
  Decl& sw(Tri v) { return tri("sw_nontrivial", &StructureFlags::sw_nontrivial, v); }
  Decl& sw_mod2(Tri v) { return tri("sw_mod2_nontrivial", &StructureFlags::sw_mod2_nontrivial, v); }
  Decl& parity(Parity v)
  {
    flags.parity = v;
    flags.cite("parity", source);
    return *this;
  }
  Decl& pi1(GroupLabel g)
  {
    flags.pi1 = std::move(g);
    flags.cite("pi1", source);
    return *this;
  }
  Decl& complex() { flags.complex_surface = true; return *this; }
  Decl& label(std::string l) { flags.labels.push_back(std::move(l)); return *this; }
};

void expect_arity(const Primitive& p, std::size_t lo, std::size_t hi)
{
  if (p.args.size() < lo || p.args.size() > hi)
    throw Error(ErrorKind::InvalidExpr, p.name + " takes " + std::to_string(lo) +
                                            (lo == hi ? "" : "-" + std::to_string(hi)) + " integer argument(s)");
}

void expect_at_least(const Primitive& p, std::size_t i, long long lo)
{
  if (p.args[i] < lo)
    throw Error(ErrorKind::InvalidExpr, p.name + " argument " + std::to_string(i + 1) + " must be >= " +
                                            std::to_string(lo));
}

PrimitiveEntry finish(const std::string& name, InvariantRecord rec, Decl decl, Capabilities caps = {})
{
  if (!is_consistent(rec))
    throw Error(ErrorKind::InvalidExpr, name + ": inconsistent invariants chi=" + to_string(rec.chi) +
                                            ", tau=" + to_string(rec.tau) + ", b1=" + to_string(rec.b1));
  complete_flags(rec, decl.flags);
  return {std::move(rec), std::move(decl.flags), std::move(caps)};
}

Surface fiber_torus(const std::string& tag)
{
  return {1, true, 0, tag};
}

PrimitiveEntry elliptic_surface(const Integer& n)
{
  const std::string src = "elliptic surface E(" + to_string(n) + ")";
  Decl d(src);
  d.pi1(GroupLabel::trivial()).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::no).complex();
  d.acd(Tri::yes);
  d.flags.cite("acd", "Mandelbaum-Moishezon: elliptic surfaces are almost completely decomposable");
  if (n % 2 == 0)
    d.spin(Tri::yes);
  Capabilities caps;
  caps.elliptic_fiber = true;
  caps.surfaces.push_back(fiber_torus("fiber"));
  if (n == 4) {
    caps.surfaces.front().tag = "T";
    caps.surfaces.push_back({2, true, 0, "F"});
  }
  return finish("E", {12 * n, -8 * n, 0}, d, caps);
}

PrimitiveEntry product_of_surfaces(const Integer& g1, const Integer& g2)
{
  Decl d("product of Riemann surfaces");
  d.spin(Tri::yes).kahler(Tri::yes).symplectic(Tri::yes).complex();
  d.pi1(GroupLabel::presented("pi1(F" + to_string(g1) + "xF" + to_string(g2) + ")"));
  Capabilities caps;
  if (g2 == 2 && g1 >= 2) {
    // Gompf's Lagrangian tori C1xC'1, C2xC'3, C3xC'2, C4xC'4, CixC'1 made symplectic
    for (Integer i = 1; i <= 2 * g1; ++i)
      caps.surfaces.push_back({1, false, i <= 4 ? 2 : 1, "T" + to_string(i)});
    caps.pi1_when_exhausted = GroupLabel::trivial();
  }
  return finish("FgProduct", {(2 - 2 * g1) * (2 - 2 * g2), 0, 2 * g1 + 2 * g2}, d, caps);
}

PrimitiveEntry builtin(const Primitive& p)
{
  const std::string& n = p.name;
  if (n != "XG" && p.group)
    throw Error(ErrorKind::InvalidExpr, n + " takes no group argument");

  if (n == "CP2" || n == "CP2b" || n == "S2xS2" || n == "K3" || n == "S1xS3" || n == "S4" || n == "X442")
    expect_arity(p, 0, 0);

  if (n == "CP2") {
    Decl d("complex projective plane");
    d.pi1(GroupLabel::trivial()).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::no).acd(Tri::yes).complex();
    return finish(n, {3, 1, 0}, d);
  }
  if (n == "CP2b") {
    Decl d("complex projective plane, reversed orientation");
    d.pi1(GroupLabel::trivial()).acd(Tri::yes);
    return finish(n, {3, -1, 0}, d);
  }
  if (n == "S2xS2") {
    Decl d("product of spheres");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::no);
    d.acd(Tri::yes).complex();
    return finish(n, {4, 0, 0}, d);
  }
  if (n == "K3") {
    Decl d("K3 surface");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::no);
    d.acd(Tri::yes).complex();
    Capabilities caps;
    caps.elliptic_fiber = true;
    caps.surfaces.push_back(fiber_torus("fiber"));
    return finish(n, {24, -16, 0}, d, caps);
  }
  if (n == "S1xS3") {
    Decl d("product S1 x S3");
    d.pi1(GroupLabel::presented("Z")).spin(Tri::yes);
    return finish(n, {0, 0, 1}, d);
  }
  if (n == "S4") {
    Decl d("four-sphere");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes);
    return finish(n, {2, 0, 0}, d);
  }
  if (n == "X442") {
    Decl d("smooth hypersurface of tridegree (4,4,2) in (CP1)^3");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::yes);
    d.complex();
    return finish(n, {104, -64, 0}, d);
  }
  if (n == "E") {
    expect_arity(p, 1, 1);
    expect_at_least(p, 0, 1);
    return elliptic_surface(p.args[0]);
  }
  if (n == "Sd") {
    expect_arity(p, 1, 1);
    expect_at_least(p, 0, 2);
    Decl d("rational homology sphere of Ue");
    d.pi1(GroupLabel::cyclic(p.args[0])).cover_spin(Tri::yes).parity(Parity::even);
    d.flags.cite("cover_spin", "universal cover is (d-1)(S2xS2)");
    d.flags.cite("parity", "b2 = 0");
    return finish(n, {2, 0, 0}, d);
  }
  if (n == "Xk") {
    expect_arity(p, 1, 1);
    expect_at_least(p, 0, 1);
    const Integer& k = p.args[0];
    Decl d("Gompf: fiber sum of F_{k+1} x F_2 with 2k+2 copies of E(2)");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes).symplectic(Tri::yes);
    Capabilities caps;
    caps.surfaces.push_back({2, false, 0, "pt x F2"});
    caps.surfaces.push_back({2, false, 0, "pt' x F2"});
    return finish(n, {52 * k + 48, -32 * (k + 1), 0}, d, caps);
  }
  if (n == "XG") {
    expect_arity(p, 2, 3);
    if (!p.group)
      throw Error(ErrorKind::InvalidExpr, "XG needs a group label");
    InvariantRecord rec{p.args[0], p.args[1], p.args.size() > 2 ? p.args[2] : Integer(0)};
    if (rec.c1sq() != 0)
      throw Error(ErrorKind::InvalidExpr, "XG requires c1^2 = 2 chi + 3 tau = 0, got " + to_string(rec.c1sq()));
    Decl d("Gompf: spin symplectic manifold with prescribed fundamental group");
    d.pi1(*p.group).spin(Tri::yes).symplectic(Tri::yes);
    Capabilities caps;
    caps.surfaces.push_back({1, false, 0, "T"});
    return finish(n, rec, d, caps);
  }
  if (n == "Y") {
    expect_arity(p, 1, 1);
    expect_at_least(p, 0, 1);
    Decl d("E(2) after a logarithmic transform of odd multiplicity");
    d.pi1(GroupLabel::trivial()).spin(Tri::yes).kahler(Tri::yes).symplectic(Tri::yes).general_type(Tri::no);
    d.sw_mod2(Tri::yes).acd(Tri::yes).complex().label("basic class 2*" + to_string(p.args[0]) + "*f");
    d.flags.cite("acd", "Mandelbaum-Moishezon: elliptic surfaces are almost completely decomposable");
    Capabilities caps;
    caps.elliptic_fiber = true;
    caps.surfaces.push_back(fiber_torus("fiber"));
    return finish(n, {24, -16, 0}, d, caps);
  }
  if (n == "FgProduct") {
    expect_arity(p, 2, 2);
    expect_at_least(p, 0, 0);
    expect_at_least(p, 1, 0);
    return product_of_surfaces(p.args[0], p.args[1]);
  }
  if (n == "Sympl") {
    expect_arity(p, 3, 3);
    expect_at_least(p, 0, 1);
    expect_at_least(p, 2, 1);
    const Integer& x = p.args[0];
    const Integer& y = p.args[1];
    Decl d("Braungardt-Kotschick: ACD minimal symplectic block");
    d.pi1(GroupLabel::trivial()).symplectic(Tri::yes).acd(Tri::yes);
    if (x >= 2)
      d.sw(Tri::yes);
    d.label("structure " + to_string(p.args[2]));
    return finish(n, {12 * x - y, y - 8 * x, 0}, d);
  }
  throw Error(ErrorKind::UnknownPrimitive, "unknown primitive " + n);
}

} // namespace

bool PrimitiveRegistry::is_builtin(const std::string& name)
{
  for (auto b : builtin_names)
    if (b == name)
      return true;
  return false;
}

bool PrimitiveRegistry::contains(const std::string& name) const
{
  if (is_builtin(name))
    return true;
  std::lock_guard lock(mutex_);
  return user_.count(name) > 0;
}

PrimitiveEntry PrimitiveRegistry::lookup(const Primitive& prim) const
{
  if (is_builtin(prim.name))
    return builtin(prim);
  std::lock_guard lock(mutex_);
  auto it = user_.find(prim.name);
  if (it == user_.end())
    throw Error(ErrorKind::UnknownPrimitive, "unknown primitive " + prim.name);
  if (!prim.args.empty() || prim.group)
    throw Error(ErrorKind::InvalidExpr, prim.name + " takes no arguments");
  return it->second;
}

void PrimitiveRegistry::register_primitive(const std::string& name, InvariantRecord rec, StructureFlags flags,
                                           Capabilities caps)
{
  std::lock_guard lock(mutex_);
  if (sealed_)
    throw Error(ErrorKind::RegistrySealed, "registry is sealed; cannot register " + name);
  if (is_builtin(name) || user_.count(name))
    throw Error(ErrorKind::DuplicateName, "primitive " + name + " already exists");
  if (!is_consistent(rec))
    throw Error(ErrorKind::InconsistentFlags, name + ": invariant record is inconsistent (b2 < |tau| or parity)");
  complete_flags(rec, flags);
  user_.emplace(name, PrimitiveEntry{std::move(rec), std::move(flags), std::move(caps)});
}

void PrimitiveRegistry::seal()
{
  std::lock_guard lock(mutex_);
  sealed_ = true;
}

bool PrimitiveRegistry::sealed() const
{
  std::lock_guard lock(mutex_);
  return sealed_;
}

PrimitiveRegistry& default_registry()
{
  static PrimitiveRegistry registry;
  return registry;
}

} // namespace fourman
