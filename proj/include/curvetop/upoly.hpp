#pragma once

#include "curvetop/number.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace curvetop {

/// Dense univariate polynomial with integer coefficients. Coefficient i
/// belongs to x^i; trailing zeros are always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero outside the stored range.
  Integer coeff(int i) const;
  const Integer& lcf() const;

  /// Largest bit length over all coefficients (the lambda of magnitude
  /// (d, lambda), so |c_i| <= 2^lambda).
  std::size_t bitsize() const;

  Rational eval(const Rational& q) const;
  /// Exact sign of the value at q; avoids building the full rational.
  int sign_at(const Rational& q) const;

  IntPoly derivative() const;
  Integer content() const;
  /// Content removed and leading coefficient made positive.
  IntPoly primitive_part() const;
  IntPoly negated() const;
  /// p(-x)
  IntPoly reflected() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Dense polynomial with rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  RatPoly scaled(const Rational& c) const;
  /// Multiply by the lcm of denominators, giving an integer polynomial with
  /// the same roots. The scale factor is positive.
  IntPoly clear_denominators() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// lcf(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact division a / b in Z[x]; throws PreconditionError if b does not
/// divide a.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

/// Exact evaluation g(q).
Rational eval_rational(const IntPoly& g, const Rational& q);

/// Primitive gcd over Q scaled to Z[x] with positive leading coefficient.
IntPoly gcd_int(const IntPoly& g, const IntPoly& h);

/// g / gcd(g, g'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& g);

/// 1 + max_{i<d} |g_i| / |lcf(g)|; every complex root is strictly smaller in
/// modulus.
Rational cauchy_root_bound(const IntPoly& g);

/// ceil(sqrt(sum g_i^2)), a rational upper bound for the Mahler measure.
Rational mahler_two_norm_bound(const IntPoly& g);

IntPoly derivative(const IntPoly& g);

/// Resultant of g and g' divided by lcf(g), up to sign. Nonzero exactly when
/// g is square-free; constants give 1.
Integer discriminant(const IntPoly& g);

}  // namespace curvetop
