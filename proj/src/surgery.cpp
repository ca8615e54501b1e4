#include "fourman/surgery.hpp"

#include "fourman/error.hpp"
#include "fourman/sw_rules.hpp"

namespace fourman {

namespace {

Tri all_of(const std::vector<WeightedPart>& parts, Tri StructureFlags::*slot)
{
  Tri out = Tri::yes;
  for (const auto& p : parts) {
    Tri v = p.eval.flags.*slot;
    if (v == Tri::no)
      return Tri::no;
    if (v == Tri::unknown)
      out = Tri::unknown;
  }
  return out;
}

void append_labels(std::vector<std::string>& to, const std::vector<std::string>& from)
{
  to.insert(to.end(), from.begin(), from.end());
}

GroupLabel free_product(const std::vector<WeightedPart>& parts)
{
  std::vector<std::string> factors;
  const GroupLabel* single = nullptr;
  Integer count = 0;
  for (const auto& p : parts) {
    const auto& g = p.eval.flags.pi1;
    if (g.kind == GroupLabel::Kind::unknown)
      return GroupLabel::unknown();
    if (g.is_trivial())
      continue;
    count += p.multiplicity;
    single = &g;
    for (Integer i = 0; i < p.multiplicity; ++i)
      factors.push_back(g.str());
  }
  if (count == 0)
    return GroupLabel::trivial();
  if (count == 1)
    return *single;
  std::string name;
  for (const auto& f : factors)
    name += (name.empty() ? "" : " * ") + f;
  return GroupLabel::presented(name);
}

} // namespace

Evaluation connected_sum(const std::vector<WeightedPart>& parts)
{
  if (parts.empty())
    throw Error(ErrorKind::InvalidExpr, "connected sum needs at least one part");
  Integer total = 0;
  for (const auto& p : parts) {
    if (p.multiplicity < 1)
      throw Error(ErrorKind::InvalidExpr, "connected sum multiplicities must be >= 1");
    total += p.multiplicity;
  }
  if (total == 1)
    return parts.front().eval;

  Evaluation out;
  out.record = {-2 * (total - 1), 0, 0};
  for (const auto& p : parts) {
    out.record.chi += p.multiplicity * p.eval.record.chi;
    out.record.tau += p.multiplicity * p.eval.record.tau;
    out.record.b1 += p.multiplicity * p.eval.record.b1;
  }

  auto& f = out.flags;
  f.pi1 = free_product(parts);
  f.cite("pi1", "Seifert-Van Kampen: free product of the summands' groups");

  Tri spin = all_of(parts, &StructureFlags::spin);
  if (spin != Tri::unknown) {
    f.spin = spin;
    f.cite("spin", "connected sums are spin iff every summand is spin");
  }
  Tri cover_spin = all_of(parts, &StructureFlags::cover_spin);
  if (cover_spin != Tri::unknown) {
    f.cover_spin = cover_spin;
    f.cite("cover_spin", "the universal cover is a sum of covers of the summands");
  }

  bool any_odd = false, all_even = true;
  for (const auto& p : parts) {
    any_odd |= p.eval.flags.parity == Parity::odd;
    all_even &= p.eval.flags.parity == Parity::even;
  }
  if (any_odd || all_even) {
    f.parity = any_odd ? Parity::odd : Parity::even;
    f.cite("parity", "intersection form of a sum is the orthogonal sum");
  }

  if (f.pi1.is_trivial() && all_of(parts, &StructureFlags::acd) == Tri::yes) {
    f.acd = Tri::yes;
    f.cite("acd", "sums of almost completely decomposable manifolds");
  }

  std::vector<SwPart> sw_parts;
  for (const auto& p : parts)
    sw_parts.push_back({&p.eval.record, &p.eval.flags, p.multiplicity});
  auto sw = sw_sum(sw_parts);
  if (sw.value != Tri::unknown) {
    f.sw_nontrivial = sw.value;
    f.cite("sw_nontrivial", sw.rule + ": " + sw.citation);
  }

  for (const auto& p : parts)
    append_labels(f.labels, p.eval.flags.labels);
  complete_flags(out.record, f);
  return out;
}

namespace {

struct Match {
  std::size_t left;
  std::size_t right;
};

std::optional<Match> find_surfaces(const Capabilities& l, const Capabilities& r, const Integer& genus,
                                   bool& any_genus)
{
  any_genus = false;
  for (std::size_t i = 0; i < l.surfaces.size(); ++i) {
    if (l.surfaces[i].genus != genus)
      continue;
    for (std::size_t j = 0; j < r.surfaces.size(); ++j) {
      if (r.surfaces[j].genus != genus)
        continue;
      any_genus = true;
      if (l.surfaces[i].simply_connected_complement || r.surfaces[j].simply_connected_complement)
        return Match{i, j};
    }
  }
  return std::nullopt;
}

bool has_killing_surface(const Capabilities& caps)
{
  for (const auto& s : caps.surfaces)
    if (s.kills > 0)
      return true;
  return false;
}

GroupLabel side_group(const Evaluation& side, const Surface& used, const Capabilities& remaining)
{
  if (used.kills > 0 && side.caps.pi1_when_exhausted && !has_killing_surface(remaining))
    return *side.caps.pi1_when_exhausted;
  if (used.kills > 0)
    return GroupLabel::presented(side.flags.pi1.str() + " / <surface>");
  return side.flags.pi1;
}

} // namespace

Evaluation fiber_sum(const Evaluation& left, const Evaluation& right, const Integer& genus)
{
  if (genus < 0)
    throw Error(ErrorKind::InvalidExpr, "fiber sum genus must be >= 0");
  bool any_genus = false;
  auto match = find_surfaces(left.caps, right.caps, genus, any_genus);
  if (!match) {
    if (any_genus)
      throw Error(ErrorKind::UnsupportedPattern, "fiber sum along genus " + to_string(genus) +
                                                      " needs one surface with simply connected complement");
    throw Error(ErrorKind::MissingCapability, "no pair of genus " + to_string(genus) +
                                                   " self-intersection zero surfaces to glue");
  }
  const Surface ls = left.caps.surfaces[match->left];
  const Surface rs = right.caps.surfaces[match->right];

  Evaluation out;
  out.record.chi = left.record.chi + right.record.chi - 2 * (2 - 2 * genus);
  out.record.tau = left.record.tau + right.record.tau;
  out.record.b1 = left.record.b1 + right.record.b1 - (rs.simply_connected_complement ? ls.kills : Integer(0)) -
                  (ls.simply_connected_complement ? rs.kills : Integer(0));

  Capabilities lrest = left.caps, rrest = right.caps;
  lrest.surfaces.erase(lrest.surfaces.begin() + static_cast<long>(match->left));
  rrest.surfaces.erase(rrest.surfaces.begin() + static_cast<long>(match->right));
  out.caps.surfaces = lrest.surfaces;
  out.caps.surfaces.insert(out.caps.surfaces.end(), rrest.surfaces.begin(), rrest.surfaces.end());
  if (has_killing_surface(out.caps))
    out.caps.pi1_when_exhausted = left.caps.pi1_when_exhausted ? left.caps.pi1_when_exhausted
                                                               : right.caps.pi1_when_exhausted;

  auto& f = out.flags;
  GroupLabel lg = side_group(left, ls, lrest);
  GroupLabel rg = side_group(right, rs, rrest);
  if (lg.kind == GroupLabel::Kind::unknown || rg.kind == GroupLabel::Kind::unknown)
    f.pi1 = GroupLabel::unknown();
  else if (lg.is_trivial())
    f.pi1 = rg;
  else if (rg.is_trivial())
    f.pi1 = lg;
  else
    f.pi1 = GroupLabel::unknown();
  if (f.pi1.kind != GroupLabel::Kind::unknown)
    f.cite("pi1", "Seifert-Van Kampen: glued surface has simply connected complement on one side");

  if (left.flags.symplectic == Tri::yes && right.flags.symplectic == Tri::yes) {
    f.symplectic = Tri::yes;
    f.cite("symplectic", "Gompf: symplectic sum along symplectic surfaces");
  }
  if (left.flags.spin == Tri::yes && right.flags.spin == Tri::yes) {
    f.spin = Tri::yes;
    f.cite("spin", "Gompf: fiber sum of spin manifolds along these surfaces is spin");
  }
  append_labels(f.labels, left.flags.labels);
  append_labels(f.labels, right.flags.labels);
  auto sw = sw_block(out.record, f);
  if (sw.value != Tri::unknown) {
    f.sw_nontrivial = sw.value;
    f.cite("sw_nontrivial", sw.rule + ": " + sw.citation);
  }
  auto sw2 = sw_mod2_block(out.record, f);
  if (sw2.value != Tri::unknown) {
    f.sw_mod2_nontrivial = sw2.value;
    f.cite("sw_mod2_nontrivial", sw2.rule + ": " + sw2.citation);
  }
  complete_flags(out.record, f);
  return out;
}

Evaluation log_transform(const Evaluation& inner, const Integer& multiplicity)
{
  if (multiplicity < 1)
    throw Error(ErrorKind::InvalidExpr, "log transform multiplicity must be >= 1");
  if (!inner.caps.elliptic_fiber)
    throw Error(ErrorKind::MissingCapability, "log transform needs an elliptic fiber");
  if (multiplicity == 1)
    return inner;
  Evaluation out = inner;
  auto& f = out.flags;
  if (multiplicity % 2 == 0 || inner.flags.spin != Tri::yes) {
    // spin is only known to survive odd multiplicities
    f.spin = f.cover_spin = Tri::unknown;
    f.parity = Parity::unknown;
    f.w2type = W2Type::unknown;
    for (const char* key : {"spin", "cover_spin", "parity", "w2type"})
      f.provenance.erase(key);
  } else {
    f.cite("spin", "log transform of odd multiplicity on a spin elliptic surface stays spin");
  }
  f.labels.push_back("logt(" + to_string(multiplicity) + ")");
  complete_flags(out.record, f);
  return out;
}

Expr log_transform(const Expr& expr, const Integer& multiplicity, const PrimitiveRegistry& registry)
{
  auto inner = evaluate(expr, registry);
  log_transform(inner, multiplicity);
  if (multiplicity == 1)
    return expr;
  return log_transform_node(expr, multiplicity);
}

namespace {

Expr cover_of(const Expr& expr, const Evaluation& eval, const PrimitiveRegistry& registry);

Expr cover_of_sum(const ConnectedSum& sum, const PrimitiveRegistry& registry)
{
  std::vector<Summand> parts = flatten_sum(connected_sum(sum.parts));
  std::optional<std::size_t> cyclic;
  std::vector<Evaluation> evals;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    evals.push_back(evaluate(parts[i].expr, registry));
    const auto& g = evals.back().flags.pi1;
    if (g.is_trivial())
      continue;
    if (!g.is_cyclic() || cyclic || parts[i].multiplicity != 1)
      throw Error(ErrorKind::UnsupportedPattern, "universal cover needs exactly one summand with cyclic pi1");
    cyclic = i;
  }
  if (!cyclic)
    throw Error(ErrorKind::UnsupportedPattern, "no cyclic summand");
  const Integer d = evals[*cyclic].flags.pi1.order;
  std::vector<Summand> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == *cyclic)
      out.push_back({cover_of(parts[i].expr, evals[i], registry), 1});
    else
      out.push_back({parts[i].expr, d * parts[i].multiplicity});
  }
  return flat_sum(out);
}

Expr cover_of(const Expr& expr, const Evaluation& eval, const PrimitiveRegistry& registry)
{
  if (eval.flags.pi1.is_trivial())
    return expr;
  if (!eval.flags.pi1.is_cyclic())
    throw Error(ErrorKind::UnsupportedPattern, "universal covers are supported for cyclic pi1 only");
  if (const auto* q = expr.as<Quotient>())
    return q->inner;
  if (const auto* p = expr.as<Primitive>(); p && p->name == "Sd")
    return flat_sum({{prim("S2xS2"), p->args.at(0) - 1}});
  if (const auto* s = expr.as<ConnectedSum>())
    return cover_of_sum(*s, registry);
  throw Error(ErrorKind::UnsupportedPattern, "no universal cover pattern for this expression");
}

} // namespace

Expr universal_cover(const Expr& expr, const PrimitiveRegistry& registry)
{
  auto eval = evaluate(expr, registry);
  Expr cover = cover_of(expr, eval, registry);
  if (eval.flags.pi1.is_trivial())
    return cover;
  const Integer d = eval.flags.pi1.order;
  auto up = evaluate(cover, registry);
  if (up.record.chi != d * eval.record.chi || up.record.tau != d * eval.record.tau)
    throw Error(ErrorKind::MismatchedInvariants, "cover invariants are not " + to_string(d) + " times the quotient's");
  return cover;
}

} // namespace fourman
