#pragma once

#include "curvetop/interval.hpp"
#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace curvetop {

/// Contains exactly one distinct real root. Either lo == hi (the root is the
/// rational lo) or the root lies in the open interval (lo, hi).
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::optional<int> multiplicity;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Interval as_interval() const { return Interval(lo, hi); }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Sorted, pairwise disjoint isolating intervals for the distinct real roots
/// of g. Endpoints of open intervals are never roots of g.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& g);

/// Shrinks every interval to width <= eps by sign bisection on the
/// square-free part of g. Intervals already narrow enough are kept.
std::vector<IsolatingInterval> refine_to_width(const IntPoly& g,
                                               std::vector<IsolatingInterval> intervals,
                                               const Rational& eps);

/// Single-interval refinement against a square-free g.
IsolatingInterval refine_isolating(const IntPoly& squarefree_g, IsolatingInterval I,
                                   const Rational& eps);

/// q_0 < z_1 < q_1 < ... < z_m < q_m with g(q_i) != 0. Interior points are
/// low-bitsize dyadics between neighbouring intervals; the outer ones are
/// -(B + 1) and B + 1 for the Cauchy bound B. No roots gives {0}.
std::vector<Rational> intermediate_points(const IntPoly& g,
                                          std::vector<IsolatingInterval> intervals);

/// Source of interval approximations to the coefficients of a real
/// polynomial. query(p) returns degree()+1 intervals of width <= 2^-p, each
/// containing the true coefficient, and contained in the answer for any
/// smaller p.
class CoeffOracle {
 public:
  virtual ~CoeffOracle() = default;
  virtual int degree() const = 0;
  virtual std::vector<Interval> query(unsigned long precision) = 0;
};

class ExactCoeffOracle : public CoeffOracle {
 public:
  explicit ExactCoeffOracle(IntPoly g) : g_(std::move(g)) {}
  int degree() const override { return g_.degree(); }
  std::vector<Interval> query(unsigned long precision) override;

 private:
  IntPoly g_;
};

/// Root isolation for a square-free real polynomial known only through a
/// CoeffOracle. Precision starts at 53 bits and doubles whenever the
/// interval Descartes test or a sign evaluation stays inconclusive; beyond
/// max_precision it throws PrecisionOverflow.
class BitstreamIsolator {
 public:
  static constexpr unsigned long kStartPrecision = 53;
  static constexpr unsigned long kMaxPrecision = 1UL << 20;

  explicit BitstreamIsolator(std::shared_ptr<CoeffOracle> oracle,
                             unsigned long max_precision = kMaxPrecision);

  std::size_t count() const { return roots_.size(); }
  const std::vector<IsolatingInterval>& intervals() const { return roots_; }
  unsigned long precision() const { return precision_; }

  /// Shrinks root i to width <= eps, raising precision as needed.
  void refine(std::size_t i, const Rational& eps);
  void refine_all(const Rational& eps);

 private:
  struct Node {
    Rational lo, hi;
    int slo, shi;
    int depth;
  };

  void fetch(unsigned long precision);
  void raise_precision(std::size_t pending);
  bool isolate_at_current_precision();
  /// Interval value of the approximated polynomial at a rational point.
  Interval value_at(const Rational& x) const;
  int sign_at(const Rational& x) const { return value_at(x).sign(); }
  /// Descartes variation range on (lo, hi): {min, max}.
  std::pair<int, int> variations(const Rational& lo, const Rational& hi) const;
  /// First split point in (lo, hi) with a determinate sign, if any.
  std::optional<std::pair<Rational, int>> split_point(const Rational& lo,
                                                      const Rational& hi) const;

  std::shared_ptr<CoeffOracle> oracle_;
  unsigned long max_precision_;
  unsigned long precision_ = kStartPrecision;
  std::vector<Interval> coeffs_;
  std::vector<IsolatingInterval> roots_;
  std::vector<std::pair<int, int>> root_signs_;
};

/// Isolates the real roots of the oracle polynomial: (count, intervals).
std::pair<int, std::vector<IsolatingInterval>> isolate_oracle_poly(
    std::shared_ptr<CoeffOracle> oracle);

}  // namespace curvetop
