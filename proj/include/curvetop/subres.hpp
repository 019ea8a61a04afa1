#pragma once

#include "curvetop/bipoly.hpp"
#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <vector>

namespace curvetop {

/// Signed subresultant sequence of (f, f_y) in Z[x][y] with cofactors.
///
/// Index i runs over 0..n with n = deg_y f. sres[n] = f and sres[n-1] = f_y;
/// below that the determinantal signed subresultants (signed convention:
/// (-1)^((n-i)(n-i-1)/2) times the classical Sylvester-submatrix
/// determinant). principal[i] is the y^i coefficient of sres[i], with the
/// convention principal[n] = 1. Every entry satisfies
/// sres[i] = u[i] f + v[i] f_y exactly.
struct SubresChain {
  int n = 0;
  BiPoly f;
  BiPoly fy;
  std::vector<BiPoly> sres;
  std::vector<BiPoly> u;
  std::vector<BiPoly> v;
  std::vector<IntPoly> principal;
  IntPoly resultant;  // principal[0]

  /// Coefficient of y^j in sres[i], a polynomial in x.
  IntPoly coefficient(int i, int j) const;
};

SubresChain subresultant_chain(const BiPoly& f, const BiPoly& fy);

/// A univariate signed subresultant chain of (g, h) over Z, deg h < deg g.
struct UnivChain {
  int n = 0;
  std::vector<IntPoly> sres;       // 0..n
  std::vector<Rational> principal; // 0..n, principal[n] = 1
};

/// Directly computed chain of (g, g').
UnivChain univariate_chain(const IntPoly& g, const IntPoly& h);

/// The bivariate chain evaluated at x = q. sres[i] holds the exact rational
/// values of sres[i](q, y) with denominators cleared by a positive factor;
/// principal[i] holds the exact values principal[i](q).
struct SpecializedChain {
  int n = 0;
  std::vector<RatPoly> exact;      // sres[i](q, y) exactly
  std::vector<IntPoly> sres;       // positive multiples of `exact`
  std::vector<Rational> principal;
};

SpecializedChain specialize_chain(const SubresChain& chain, const Rational& q);

/// Power of the positive constant c such that the chain of (c g, c g')
/// equals c^e times the chain of (g, g') at index i (n = deg g).
int specialization_scale_exponent(int n, int i);

/// Generalized permanences minus variations of a sign sequence given from
/// the highest index down; the first entry must be nonzero.
int permanences_minus_variations(const std::vector<int>& signs);

/// Number of distinct real roots of g from the Sturm-Habicht principal
/// coefficients of (g, g').
int sturm_habicht_count(const IntPoly& g);

/// Sign sequence (lcf, sres_{n-1}(q), ..., sres_0(q)) of the chain at q,
/// and the resulting root count of f(q, y). Requires lcf_y f constant.
int sturm_habicht_count_at(const SubresChain& chain, const Rational& q);

}  // namespace curvetop
