#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace markedpoly {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses an optionally signed integer or `a/b`. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Lowest terms, integers printed without `/1`.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Narrowing to int64; throws OutOfRange if the value does not fit.
std::int64_t to_int64(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);

// Least common denominator of a vector of rationals (1 for the empty vector).
Integer common_denominator(const std::vector<Rational>& values);

} // namespace markedpoly
