#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edmcp {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Canonical text form "p/q" (denominator always written, "35/1").
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", and optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Splits a nonnegative integer x into (a, s) with x = a^2 * s and s square-free.
/// Trial division; intended for desk-scale radicands.
std::pair<Integer, Integer> square_free_split(const Integer& x);

/// Decomposes a into at most four positive squares, largest part first.
/// Returns the square roots; {} for a == 0.
std::vector<std::uint64_t> sum_of_squares(std::uint64_t a);

std::uint64_t isqrt(std::uint64_t a);

}  // namespace edmcp
