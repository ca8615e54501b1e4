#pragma once

#include "fourman/numeric.hpp"

#include <optional>
#include <string>

namespace fourman {

/// Exact numerical invariants of a closed oriented 4-manifold.
struct InvariantRecord {
  Integer chi;
  Integer tau;
  Integer b1;

  Integer c1sq() const { return 2 * chi + 3 * tau; }
  Integer c2() const { return chi; }
  Rational chi_h() const { return Rational(chi + tau, 4); }
  Integer b2() const { return chi - 2 + 2 * b1; }
  Rational b2plus() const { return Rational(b2() + tau, 2); }
  Rational b2minus() const { return Rational(b2() - tau, 2); }

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Builds a record from Chern numbers; throws NonIntegralQuotient when
/// c1^2 - 2 c2 is not divisible by 3.
InvariantRecord record_from_chern(const Integer& c1sq, const Integer& c2, const Integer& b1 = 0);

struct BettiSplit {
  Rational plus;
  Rational minus;
  std::optional<std::string> warning;
};

BettiSplit derive_betti(const InvariantRecord& rec);

/// b2+ and b2- as integers when the record is consistent.
std::optional<Integer> b2plus_int(const InvariantRecord& rec);
std::optional<Integer> b2minus_int(const InvariantRecord& rec);

/// b2 >= |tau| with integral b2 parts and b1 >= 0.
bool is_consistent(const InvariantRecord& rec);

} // namespace fourman
