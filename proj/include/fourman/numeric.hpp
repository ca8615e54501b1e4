#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace fourman {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// Floor division; the divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& a);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

bool is_integral(const Rational& q);

/// Integer value of an integral rational; throws std::domain_error otherwise.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& v);

/// "p/q" in lowest terms, or "p" when integral.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" or a decimal "p.q".
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);

/// Narrowing for loop bounds and container sizes.
long long to_ll(const Integer& v);

} // namespace fourman
