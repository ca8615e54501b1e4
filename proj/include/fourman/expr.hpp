#pragma once

#include "fourman/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fourman {

/// Ground surfaces that branched covers are built over.
enum class Base { CP2, CP1xCP1 };

std::string_view base_name(Base base);

/// Fundamental group as a symbolic label.
struct GroupLabel {
  enum class Kind { trivial, cyclic, presented, unknown };

  Kind kind = Kind::unknown;
  Integer order = 0;  // cyclic only
  std::string name;   // presented only

  static GroupLabel trivial() { return {Kind::trivial, 1, {}}; }
  static GroupLabel cyclic(Integer d);
  static GroupLabel presented(std::string name) { return {Kind::presented, 0, std::move(name)}; }
  static GroupLabel unknown() { return {}; }

  bool is_trivial() const { return kind == Kind::trivial; }
  bool is_cyclic() const { return kind == Kind::cyclic; }
  /// Known finite of odd order (trivial counts).
  bool has_odd_order() const;
  /// Finite order when known.
  std::optional<Integer> finite_order() const;

  std::string str() const;

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

/// Divisor class on CP2 (one degree) or CP1xCP1 (a bidegree).
struct DivisorClass {
  Base base = Base::CP2;
  std::vector<Integer> degrees;

  static DivisorClass on_cp2(Integer k) { return {Base::CP2, {std::move(k)}}; }
  static DivisorClass on_quadric(Integer p, Integer q) { return {Base::CP1xCP1, {std::move(p), std::move(q)}}; }

  DivisorClass scaled(const Integer& factor) const;
  DivisorClass operator-(const DivisorClass& other) const;
  bool divisible_by(const Integer& d) const;
  /// Exact division of every degree; caller checks divisible_by first.
  DivisorClass divided(const Integer& d) const;

  std::string str() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Intersection pairing on the ground surface: kk' on CP2, pq'+qp' on CP1xCP1.
Integer intersect(const DivisorClass& x, const DivisorClass& y);

enum class Action { standard, weighted };

class Expr;

struct Primitive {
  std::string name;
  std::vector<Integer> args;
  std::optional<GroupLabel> group;  // XG only

  friend bool operator==(const Primitive&, const Primitive&) = default;
};

struct CyclicCover {
  Base base;
  Integer degree;
  DivisorClass branch;
};

/// Bi-cyclic cover of CP1xCP1 of type (d,p): d-cover along a (da,db) curve,
/// then p-cover along the proper transform of a (pm,pn) curve.
struct BicyclicCover {
  Integer d, p, a, b, m, n;
};

struct Node;

/// Immutable, cheaply copyable handle to a manifold term.
class Expr {
public:
  Expr(Node node);

  const Node& node() const { return *node_; }

  template <class T>
  const T* as() const;

  template <class T>
  bool is() const;

  friend bool operator==(const Expr& x, const Expr& y);

private:
  std::shared_ptr<const Node> node_;
};

struct Quotient {
  Expr inner;
  Integer degree;
  Action action = Action::standard;
};

struct Summand {
  Expr expr;
  Integer multiplicity = 1;
};

struct ConnectedSum {
  std::vector<Summand> parts;
};

struct FiberSum {
  Expr left;
  Expr right;
  Integer genus;
};

struct LogTransform {
  Expr inner;
  Integer multiplicity;
};

using NodeVariant = std::variant<Primitive, CyclicCover, BicyclicCover, Quotient, ConnectedSum, FiberSum, LogTransform>;

struct Node : NodeVariant {
  using NodeVariant::NodeVariant;
};

template <class T>
const T* Expr::as() const
{
  return std::get_if<T>(static_cast<const NodeVariant*>(node_.get()));
}

template <class T>
bool Expr::is() const
{
  return std::holds_alternative<T>(static_cast<const NodeVariant&>(*node_));
}

bool operator==(const CyclicCover& x, const CyclicCover& y);
bool operator==(const BicyclicCover& x, const BicyclicCover& y);
bool operator==(const Quotient& x, const Quotient& y);
bool operator==(const Summand& x, const Summand& y);
bool operator==(const ConnectedSum& x, const ConnectedSum& y);
bool operator==(const FiberSum& x, const FiberSum& y);
bool operator==(const LogTransform& x, const LogTransform& y);

// Builders used throughout the engine and tests.
Expr prim(std::string name, std::vector<Integer> args = {});
Expr prim_group(std::string name, std::vector<Integer> args, GroupLabel group);
Expr cyclic_cover(Base base, Integer d, DivisorClass branch);
Expr bicyclic(Integer d, Integer p, Integer a, Integer b, Integer m, Integer n);
Expr quotient(Expr inner, Integer d, Action action = Action::standard);
Expr connected_sum(std::vector<Summand> parts);
Expr fiber_sum(Expr left, Expr right, Integer genus);
Expr log_transform_node(Expr inner, Integer multiplicity);

/// Connected sum that flattens nested sums and merges equal atoms;
/// a single part of multiplicity one collapses to the part itself.
Expr flat_sum(const std::vector<Summand>& parts);

/// Atoms of a (possibly nested) connected sum with total multiplicities, in first-seen order.
std::vector<Summand> flatten_sum(const Expr& expr);

} // namespace fourman
