#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace curvetop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// num/den in lowest terms. gmpxx's two-argument constructor does not
/// reduce, and unreduced values compare unequal to reduced ones.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "num/den" or a plain integer.
Rational parse_fraction(const std::string& text);

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

/// Number of bits of |z|; 0 for zero.
std::size_t bit_length(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

/// Smallest power of two that is >= q (q > 0).
Rational next_pow2(const Rational& q);

Rational midpoint(const Rational& a, const Rational& b);

/// Rational with the smallest power-of-two denominator (ties broken toward
/// the smallest magnitude) lying strictly inside (lo, hi). Requires lo < hi.
Rational simplest_dyadic_between(const Rational& lo, const Rational& hi);

/// Round down/up to the grid 2^-bits.
Rational round_down_dyadic(const Rational& q, unsigned long bits);
Rational round_up_dyadic(const Rational& q, unsigned long bits);

/// Approximate conversion for diagnostics, plots and numeric oracles.
long double to_long_double(const Rational& q);
long double to_long_double(const Integer& z);

}  // namespace curvetop
