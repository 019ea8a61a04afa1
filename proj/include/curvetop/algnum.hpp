#pragma once

#include "curvetop/interval.hpp"
#include "curvetop/isolate.hpp"
#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <string>
#include <vector>

namespace curvetop {

/// A real root of an integer polynomial, given by an isolating interval.
/// Refinement mutates the interval in place; an instance should be used by
/// one thread at a time.
class AlgebraicNumber {
 public:
  AlgebraicNumber(IntPoly defining, IsolatingInterval interval);
  static AlgebraicNumber from_rational(const Rational& q);

  const IntPoly& defining() const { return defining_; }
  const IntPoly& squarefree_defining() const { return squarefree_; }
  const IsolatingInterval& interval() const { return interval_; }
  Interval enclosure() const { return interval_.as_interval(); }
  bool is_rational() const { return interval_.is_point(); }

  /// Shrinks the isolating interval to width <= eps.
  void refine(const Rational& eps);

  std::string to_string() const;

 private:
  IntPoly defining_;
  IntPoly squarefree_;
  IsolatingInterval interval_;
};

/// Copy of a refined to width <= eps.
AlgebraicNumber refine(AlgebraicNumber a, const Rational& eps);

/// Enclosures J_i of h_i(alpha), each of width < delta. Uses the
/// eps <- eps^2 schedule starting at 1/2, refining a in place.
std::vector<Interval> approx_enclosures(const std::vector<IntPoly>& hs, AlgebraicNumber& a,
                                        const Rational& delta);

/// r with |r - h(alpha)| < delta: the midpoint of the final enclosure.
Rational approx_eval(const IntPoly& h, AlgebraicNumber& a, const Rational& delta);
std::vector<Rational> approx_eval_many(const std::vector<IntPoly>& hs, AlgebraicNumber& a,
                                       const Rational& delta);

/// Exact sign of g(alpha).
int sign_at(const IntPoly& g, AlgebraicNumber& a);
bool vanishes_at(const IntPoly& g, AlgebraicNumber& a);

/// Serves interval approximations of h_j(alpha), j = 0..d, as the
/// coefficients of a polynomial in y. Answers are rounded outward to the
/// grid 2^-(p+2), which keeps them nested across precisions.
class AlgebraicCoeffOracle : public CoeffOracle {
 public:
  AlgebraicCoeffOracle(std::vector<IntPoly> coeffs, AlgebraicNumber alpha);
  int degree() const override { return static_cast<int>(coeffs_.size()) - 1; }
  std::vector<Interval> query(unsigned long precision) override;
  const AlgebraicNumber& alpha() const { return alpha_; }

 private:
  std::vector<IntPoly> coeffs_;
  AlgebraicNumber alpha_;
};

}  // namespace curvetop
