#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyalg {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown when an input violates a documented precondition.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a request exceeds a configured enumeration or size bound.
struct ResourceLimit : std::length_error {
  using std::length_error::length_error;
};

// num/den in lowest terms. gmpxx leaves two-argument constructions
// uncanonicalized, so use this whenever the fraction may be reducible.
Rational ratio(long num, long den);

// Parses "p", "p/q" or "-p/q". Throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

std::size_t hash_value(const Rational& value);

// Generalized binomial coefficient t(t-1)...(t-k+1)/k!.
Rational binomial(const Rational& t, int k);

Integer factorial(int n);
Integer double_factorial(int n);  // n!! with (-1)!! = 0!! = 1

Rational power(const Rational& base, int exponent);

}  // namespace polyalg
