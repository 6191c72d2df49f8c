#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cpngenus {

// Exact scalar types used throughout. cpp_rational keeps values in lowest
// terms with a positive denominator, so every Rational in the engine is a
// canonical fraction and arithmetic never rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& v) { return boost::multiprecision::numerator(v); }
inline Integer denominator_of(const Rational& v) { return boost::multiprecision::denominator(v); }

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& v);
std::string to_string(const Integer& v);

/// Parses "p" or "p/q" (decimal, optional leading '-'). Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);
Integer integer_from_string(const std::string& s);

bool is_integer(const Rational& v);

/// Throws std::domain_error when v has a nontrivial denominator.
Integer to_integer(const Rational& v);

Integer factorial(unsigned n);

/// Integer binomial coefficient C(n, k); 0 when k > n.
Integer binomial(unsigned n, unsigned k);

/// Generalized binomial coefficient j(j-1)...(j-n+1) / n! for rational j.
/// C(j, 0) = 1 for every j.
Rational generalized_binomial(const Rational& j, unsigned n);

/// Falling factorial j(j-1)...(j-n+1); empty product = 1.
Rational falling_factorial(const Rational& j, unsigned n);

/// floor(sqrt(v)) for v >= 0. Throws std::domain_error for v < 0.
/// Pure integer Newton iteration, no floating point.
Integer isqrt_floor(const Integer& v);

/// True iff v is a perfect square; when it is and root != nullptr the
/// non-negative root is stored.
bool is_perfect_square(const Integer& v, Integer* root = nullptr);

/// base^exp with an integer exponent; exp < 0 inverts (throws on base 0).
Rational pow_rational(const Rational& base, long exp);

Integer pow_integer(const Integer& base, unsigned exp);

}  // namespace cpngenus
