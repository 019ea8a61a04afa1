#pragma once

#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <string>

namespace curvetop {

/// Closed interval with exact rational endpoints. Zero width is allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& q) { return Interval(q, q); }

  Rational width() const { return hi - lo; }
  Rational mid() const { return midpoint(lo, hi); }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// Sign of every element, or 0 if the interval contains zero.
  int sign() const;
  Rational magnitude() const;  // max(|lo|, |hi|)

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const;
};

enum class IntervalOp { add, sub, mul, div };

Interval interval_arith(IntervalOp op, const Interval& a, const Interval& b);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws PreconditionError when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval operator-(const Interval& a);

/// Horner evaluation in interval arithmetic, a_0 + I(a_1 + I(a_2 + ...)).
/// Encloses the range of h over I.
Interval interval_horner(const IntPoly& h, const Interval& I);

/// Upper bound on |y - h(alpha)| for y in interval_horner(h, I), alpha in I:
/// 2^d eps 2^lambda max(1, |alpha|)^(d-1). Requires 0 < eps < 2; degree 0
/// gives 0 since constants evaluate exactly.
Rational horner_width_bound(int degree, std::size_t lambda, const Rational& eps,
                             const Rational& alpha_abs);

}  // namespace curvetop
