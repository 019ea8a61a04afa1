#include "curvetop/interval.hpp"

#include "curvetop/errors.hpp"

#include <algorithm>
#include <array>

namespace curvetop {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw PreconditionError("interval with lo > hi");
}

int Interval::sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

Rational Interval::magnitude() const {
  Rational a = abs(lo), b = abs(hi);
  return a > b ? a : b;
}

std::string Interval::to_string() const {
  return "[" + to_fraction_string(lo) + ", " + to_fraction_string(hi) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  std::array<Rational, 4> p = {a.lo * b.lo, a.hi * b.lo, a.lo * b.hi, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return Interval(*mn, *mx);
}

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return Interval(c * a.lo, c * a.hi);
  return Interval(c * a.hi, c * a.lo);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw PreconditionError("interval division by an interval containing 0");
  }
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval interval_arith(IntervalOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case IntervalOp::add:
      return a + b;
    case IntervalOp::sub:
      return a - b;
    case IntervalOp::mul:
      return a * b;
    case IntervalOp::div:
      return a / b;
  }
  throw PreconditionError("unknown interval operation");
}

Interval interval_horner(const IntPoly& h, const Interval& I) {
  if (h.is_zero()) return Interval::point(0);
  const auto& c = h.coeffs();
  if (I.lo == I.hi) return Interval::point(h.eval(I.lo));
  Interval acc = Interval::point(Rational(c.back()));
  for (int i = h.degree() - 1; i >= 0; --i) {
    acc = acc * I;
    const Rational a(c[static_cast<std::size_t>(i)]);
    acc.lo += a;
    acc.hi += a;
  }
  return acc;
}

Rational horner_width_bound(int degree, std::size_t lambda, const Rational& eps,
                             const Rational& alpha_abs) {
  if (!(eps > 0 && eps < 2)) {
    throw PreconditionError("width bound needs 0 < eps < 2");
  }
  if (degree <= 0) return 0;
  const Rational a = abs(alpha_abs);
  const Rational base = a > 1 ? a : Rational(1);
  Rational r = pow2(degree) * eps * pow2(static_cast<long>(lambda));
  for (int i = 0; i < degree - 1; ++i) r *= base;
  return r;
}

}  // namespace curvetop
