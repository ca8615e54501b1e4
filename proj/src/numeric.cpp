#include "fourman/numeric.hpp"

#include <stdexcept>

namespace fourman {

Integer floor_div(const Integer& a, const Integer& b)
{
  if (b == 0)
    throw std::domain_error("floor_div by zero");
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0)))
    --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
  Integer r = a % m;
  if (r < 0)
    r += m;
  return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
  Integer x = a < 0 ? Integer(-a) : a;
  Integer y = b < 0 ? Integer(-b) : b;
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

bool divides(const Integer& d, const Integer& a)
{
  if (d == 0)
    return a == 0;
  return a % d == 0;
}

Integer floor(const Rational& q)
{
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Integer ceil(const Rational& q)
{
  return -floor(Rational(-q));
}

bool is_integral(const Rational& q)
{
  return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q)
{
  if (!is_integral(q))
    throw std::domain_error("rational " + to_string(q) + " is not an integer");
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& v)
{
  return v.str();
}

std::string to_string(const Rational& q)
{
  if (is_integral(q))
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::optional<Integer> parse_integer(std::string_view text)
{
  if (text.empty())
    return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+')
    i = 1;
  if (i == text.size())
    return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      return std::nullopt;
  Integer v(std::string(text.substr(i)));
  return text[0] == '-' ? Integer(-v) : v;
}

std::optional<Rational> parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash == std::string_view::npos && dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
      return std::nullopt;
    bool neg = !whole.empty() && whole[0] == '-';
    auto w = whole.empty() || whole == "-" ? std::optional<Integer>(0) : parse_integer(whole);
    if (!w)
      return std::nullopt;
    Rational part(Integer(std::string(frac)), boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size())));
    return neg ? Rational(*w) - part : Rational(*w) + part;
  }
  if (slash == std::string_view::npos) {
    auto v = parse_integer(text);
    if (!v)
      return std::nullopt;
    return Rational(*v);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0)
    return std::nullopt;
  return Rational(*num, *den);
}

long long to_ll(const Integer& v)
{
  return v.convert_to<long long>();
}

} // namespace fourman
