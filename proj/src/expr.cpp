#include "fourman/expr.hpp"

#include <sstream>

namespace fourman {

std::string_view base_name(Base base)
{
  return base == Base::CP2 ? "CP2" : "CP1xCP1";
}

GroupLabel GroupLabel::cyclic(Integer d)
{
  if (d == 1)
    return trivial();
  return {Kind::cyclic, std::move(d), {}};
}

bool GroupLabel::has_odd_order() const
{
  auto order = finite_order();
  return order && (*order % 2 == 1);
}

std::optional<Integer> GroupLabel::finite_order() const
{
  switch (kind) {
  case Kind::trivial:
    return Integer(1);
  case Kind::cyclic:
    return order;
  default:
    return std::nullopt;
  }
}

std::string GroupLabel::str() const
{
  switch (kind) {
  case Kind::trivial:
    return "trivial";
  case Kind::cyclic:
    return "Z/" + to_string(order);
  case Kind::presented:
    return name;
  case Kind::unknown:
    break;
  }
  return "unknown";
}

DivisorClass DivisorClass::scaled(const Integer& factor) const
{
  DivisorClass out = *this;
  for (auto& v : out.degrees)
    v *= factor;
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const
{
  DivisorClass out = *this;
  for (std::size_t i = 0; i < out.degrees.size(); ++i)
    out.degrees[i] -= other.degrees.at(i);
  return out;
}

bool DivisorClass::divisible_by(const Integer& d) const
{
  for (const auto& v : degrees)
    if (!divides(d, v))
      return false;
  return true;
}

DivisorClass DivisorClass::divided(const Integer& d) const
{
  DivisorClass out = *this;
  for (auto& v : out.degrees)
    v /= d;
  return out;
}

std::string DivisorClass::str() const
{
  if (base == Base::CP2)
    return "O(" + to_string(degrees.at(0)) + ")";
  return "O(" + to_string(degrees.at(0)) + "," + to_string(degrees.at(1)) + ")";
}

Integer intersect(const DivisorClass& x, const DivisorClass& y)
{
  if (x.base == Base::CP2)
    return x.degrees.at(0) * y.degrees.at(0);
  return x.degrees.at(0) * y.degrees.at(1) + x.degrees.at(1) * y.degrees.at(0);
}

Expr::Expr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

bool operator==(const Expr& x, const Expr& y)
{
  return x.node_ == y.node_ || *x.node_ == *y.node_;
}

bool operator==(const CyclicCover& x, const CyclicCover& y)
{
  return x.base == y.base && x.degree == y.degree && x.branch == y.branch;
}

bool operator==(const BicyclicCover& x, const BicyclicCover& y)
{
  return x.d == y.d && x.p == y.p && x.a == y.a && x.b == y.b && x.m == y.m && x.n == y.n;
}

bool operator==(const Quotient& x, const Quotient& y)
{
  return x.degree == y.degree && x.action == y.action && x.inner == y.inner;
}

bool operator==(const Summand& x, const Summand& y)
{
  return x.multiplicity == y.multiplicity && x.expr == y.expr;
}

bool operator==(const ConnectedSum& x, const ConnectedSum& y)
{
  return x.parts == y.parts;
}

bool operator==(const FiberSum& x, const FiberSum& y)
{
  return x.genus == y.genus && x.left == y.left && x.right == y.right;
}

bool operator==(const LogTransform& x, const LogTransform& y)
{
  return x.multiplicity == y.multiplicity && x.inner == y.inner;
}

Expr prim(std::string name, std::vector<Integer> args)
{
  return Expr(Primitive{std::move(name), std::move(args), std::nullopt});
}

Expr prim_group(std::string name, std::vector<Integer> args, GroupLabel group)
{
  return Expr(Primitive{std::move(name), std::move(args), std::move(group)});
}

Expr cyclic_cover(Base base, Integer d, DivisorClass branch)
{
  return Expr(CyclicCover{base, std::move(d), std::move(branch)});
}

Expr bicyclic(Integer d, Integer p, Integer a, Integer b, Integer m, Integer n)
{
  return Expr(BicyclicCover{std::move(d), std::move(p), std::move(a), std::move(b), std::move(m), std::move(n)});
}

Expr quotient(Expr inner, Integer d, Action action)
{
  return Expr(Quotient{std::move(inner), std::move(d), action});
}

Expr connected_sum(std::vector<Summand> parts)
{
  return Expr(ConnectedSum{std::move(parts)});
}

Expr fiber_sum(Expr left, Expr right, Integer genus)
{
  return Expr(FiberSum{std::move(left), std::move(right), std::move(genus)});
}

Expr log_transform_node(Expr inner, Integer multiplicity)
{
  return Expr(LogTransform{std::move(inner), std::move(multiplicity)});
}

namespace {

void collect(const Expr& expr, const Integer& mult, std::vector<Summand>& out)
{
  if (const auto* sum = expr.as<ConnectedSum>()) {
    for (const auto& part : sum->parts)
      collect(part.expr, mult * part.multiplicity, out);
    return;
  }
  for (auto& existing : out) {
    if (existing.expr == expr) {
      existing.multiplicity += mult;
      return;
    }
  }
  out.push_back({expr, mult});
}

} // namespace

std::vector<Summand> flatten_sum(const Expr& expr)
{
  std::vector<Summand> out;
  collect(expr, 1, out);
  return out;
}

Expr flat_sum(const std::vector<Summand>& parts)
{
  std::vector<Summand> out;
  for (const auto& part : parts)
    if (part.multiplicity > 0)
      collect(part.expr, part.multiplicity, out);
  if (out.size() == 1 && out.front().multiplicity == 1)
    return out.front().expr;
  return connected_sum(std::move(out));
}

} // namespace fourman
