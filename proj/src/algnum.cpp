#include "curvetop/algnum.hpp"

#include "curvetop/errors.hpp"

#include <utility>

namespace curvetop {

namespace {

// Reduce g modulo the square-free defining polynomial p (positive leading
// coefficient). The result has the same sign as g at every root of p.
IntPoly reduce_mod(const IntPoly& g, const IntPoly& p) {
  if (g.degree() < p.degree()) return g;
  IntPoly r = pseudo_remainder(g, p);
  if (r.is_zero()) return r;
  const Integer c = abs(r.content());
  return exact_divide(r, IntPoly::constant(c));
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(IntPoly defining, IsolatingInterval interval)
    : defining_(std::move(defining)), interval_(std::move(interval)) {
  if (defining_.degree() < 1) {
    throw PreconditionError("algebraic number needs a defining polynomial of degree >= 1");
  }
  squarefree_ = squarefree_part(defining_);
  if (interval_.is_point()) return;
  // Keep open endpoints off the roots so sign changes certify the root.
  while (squarefree_.sign_at(interval_.lo) == 0 || squarefree_.sign_at(interval_.hi) == 0) {
    interval_ = refine_isolating(squarefree_, interval_, interval_.width() / 2);
    if (interval_.is_point()) break;
  }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  // den * x - num
  IntPoly p(std::vector<Integer>{-q.get_num(), q.get_den()});
  return AlgebraicNumber(std::move(p), {q, q, 1});
}

void AlgebraicNumber::refine(const Rational& eps) {
  interval_ = refine_isolating(squarefree_, std::move(interval_), eps);
}

std::string AlgebraicNumber::to_string() const {
  return "root of " + defining_.to_string() + " in " + interval_.as_interval().to_string();
}

AlgebraicNumber refine(AlgebraicNumber a, const Rational& eps) {
  a.refine(eps);
  return a;
}

std::vector<Interval> approx_enclosures(const std::vector<IntPoly>& hs, AlgebraicNumber& a,
                                        const Rational& delta) {
  if (!(delta > 0)) throw PreconditionError("approximation needs delta > 0");
  Rational eps(1, 2);
  std::vector<Interval> out(hs.size());
  while (true) {
    a.refine(eps);
    const Interval I = a.enclosure();
    bool ok = true;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      out[i] = interval_horner(hs[i], I);
      if (out[i].width() >= delta) ok = false;
    }
    if (ok) return out;
    eps *= eps;
  }
}

Rational approx_eval(const IntPoly& h, AlgebraicNumber& a, const Rational& delta) {
  return approx_eval_many({h}, a, delta).front();
}

std::vector<Rational> approx_eval_many(const std::vector<IntPoly>& hs, AlgebraicNumber& a,
                                       const Rational& delta) {
  std::vector<Rational> out;
  out.reserve(hs.size());
  for (const auto& J : approx_enclosures(hs, a, delta)) out.push_back(J.mid());
  return out;
}

int sign_at(const IntPoly& g, AlgebraicNumber& a) {
  if (g.is_zero()) throw PreconditionError("sign of the zero polynomial");
  if (a.is_rational()) return g.sign_at(a.interval().lo);
  const IntPoly& p = a.squarefree_defining();
  const IntPoly r = reduce_mod(g, p);
  if (r.is_zero()) return 0;
  if (r.degree() >= 1) {
    const IntPoly w = gcd_int(p, r);
    if (w.degree() >= 1) {
      // Roots of w are simple roots of p, and alpha is the only root of p
      // inside the interval, whose endpoints are not roots of p.
      const auto& I = a.interval();
      if (w.sign_at(I.lo) != w.sign_at(I.hi)) return 0;
    }
  }
  Rational eps(1, 2);
  while (true) {
    a.refine(eps);
    const int s = interval_horner(r, a.enclosure()).sign();
    if (s != 0) return s;
    if (a.is_rational()) return r.sign_at(a.interval().lo);
    eps *= eps;
  }
}

bool vanishes_at(const IntPoly& g, AlgebraicNumber& a) {
  return g.is_zero() || sign_at(g, a) == 0;
}

AlgebraicCoeffOracle::AlgebraicCoeffOracle(std::vector<IntPoly> coeffs, AlgebraicNumber alpha)
    : coeffs_(std::move(coeffs)), alpha_(std::move(alpha)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw PreconditionError("oracle for the zero polynomial");
}

std::vector<Interval> AlgebraicCoeffOracle::query(unsigned long precision) {
  const auto bits = static_cast<long>(precision);
  std::vector<Interval> J = approx_enclosures(coeffs_, alpha_, pow2(-(bits + 1)));
  for (auto& I : J) {
    I = Interval(round_down_dyadic(I.lo, precision + 2), round_up_dyadic(I.hi, precision + 2));
  }
  return J;
}

}  // namespace curvetop
