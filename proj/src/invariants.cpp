#include "fourman/invariants.hpp"

#include "fourman/error.hpp"

namespace fourman {

InvariantRecord record_from_chern(const Integer& c1sq, const Integer& c2, const Integer& b1)
{
  Integer twice_tau = c1sq - 2 * c2;
  if (!divides(3, twice_tau))
    throw Error(ErrorKind::NonIntegralQuotient,
                "signature (c1^2 - 2 c2)/3 is not integral for c1^2=" + to_string(c1sq) + ", c2=" + to_string(c2));
  return {c2, twice_tau / 3, b1};
}

BettiSplit derive_betti(const InvariantRecord& rec)
{
  BettiSplit out{rec.b2plus(), rec.b2minus(), std::nullopt};
  if (!is_integral(out.plus) || !is_integral(out.minus))
    out.warning = "non-integral b2 split (b2+ = " + to_string(out.plus) + ", b2- = " + to_string(out.minus) +
                  "): inconsistent chi, tau, b1";
  else if (out.plus < 0 || out.minus < 0)
    out.warning = "negative b2 part: b2 < |tau|";
  return out;
}

std::optional<Integer> b2plus_int(const InvariantRecord& rec)
{
  auto v = rec.b2plus();
  if (!is_integral(v))
    return std::nullopt;
  return to_integer(v);
}

std::optional<Integer> b2minus_int(const InvariantRecord& rec)
{
  auto v = rec.b2minus();
  if (!is_integral(v))
    return std::nullopt;
  return to_integer(v);
}

bool is_consistent(const InvariantRecord& rec)
{
  if (rec.b1 < 0)
    return false;
  auto split = derive_betti(rec);
  return !split.warning.has_value();
}

} // namespace fourman
