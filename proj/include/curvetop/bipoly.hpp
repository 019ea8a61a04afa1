#pragma once

#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <string>
#include <vector>

namespace curvetop {

/// Dense bivariate integer polynomial, stored as a polynomial in y whose
/// coefficients are polynomials in x: ycoeff(j) holds sum_i c[i][j] x^i.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<IntPoly> ycoeffs);
  static BiPoly from_univariate_x(const IntPoly& p);
  static BiPoly from_univariate_y(const IntPoly& p);
  static BiPoly x();
  static BiPoly y();
  static BiPoly constant(const Integer& c);

  bool is_zero() const { return ycoeffs_.empty(); }
  int degree_y() const { return static_cast<int>(ycoeffs_.size()) - 1; }
  int degree_x() const;
  int total_degree() const;
  std::size_t bitsize() const;

  /// c[i][j], the coefficient of x^i y^j.
  Integer coeff(int i, int j) const;
  const std::vector<IntPoly>& ycoeffs() const { return ycoeffs_; }
  /// Coefficient polynomial of y^j (zero outside range).
  IntPoly ycoeff(int j) const;
  /// Leading coefficient in y, a polynomial in x.
  const IntPoly& lcf_y() const;

  Rational eval(const Rational& a, const Rational& b) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Integer& c, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;
  BiPoly pow(unsigned e) const;

  /// Parseable text form, e.g. "y^2 - x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<IntPoly> ycoeffs_;
};

/// f(x, y) = F(x + s y, y).
BiPoly shear(const BiPoly& F, const Integer& s);

BiPoly partial_y(const BiPoly& f);

/// d^N f(q, y) with d the denominator of q and N = deg_x f: an integer
/// polynomial in y with the roots of f(q, y). The scale factor is positive.
IntPoly specialize_x(const BiPoly& f, const Rational& q);

}  // namespace curvetop
