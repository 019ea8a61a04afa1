#include "curvetop/errors.hpp"
#include "curvetop/interval.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace curvetop;

namespace {
Rational Q(long a, long b = 1) { return make_rational(a, b); }
Interval I(long a, long b) { return Interval(Q(a), Q(b)); }
}  // namespace

TEST_CASE("interval arithmetic examples") {
  CHECK(interval_arith(IntervalOp::add, I(1, 2), I(3, 4)) == I(4, 6));
  CHECK(interval_arith(IntervalOp::mul, I(-1, 2), I(3, 4)) == I(-4, 8));
  CHECK(interval_arith(IntervalOp::div, I(1, 1), I(2, 4)) == Interval(Q(1, 4), Q(1, 2)));
  CHECK(I(1, 2) - I(3, 5) == I(-4, -1));
  CHECK_THROWS_AS(I(1, 1) / I(-1, 1), PreconditionError);
  CHECK_THROWS_AS(I(1, 1) / I(0, 0), PreconditionError);
  CHECK_THROWS_AS(Interval(Q(2), Q(1)), PreconditionError);
}

TEST_CASE("multiplication matches endpoint products") {
  oracle::Random rnd(11);
  for (int t = 0; t < 300; ++t) {
    Rational a = rnd.rational(6, 4), b = rnd.rational(6, 4), c = rnd.rational(6, 4), d = rnd.rational(6, 4);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const Interval p = Interval(a, b) * Interval(c, d);
    std::vector<Rational> prods{a * c, a * d, b * c, b * d};
    CHECK(p.lo == *std::min_element(prods.begin(), prods.end()));
    CHECK(p.hi == *std::max_element(prods.begin(), prods.end()));
  }
}

TEST_CASE("horner examples") {
  CHECK(interval_horner(IntPoly{0, 0, 1}, I(1, 2)) == I(1, 4));
  const Interval J = interval_horner(IntPoly{0, -1, 1}, I(0, 1));
  CHECK(J.contains(Interval(Q(-1, 4), Q(0))));
  CHECK(interval_horner(IntPoly{5}, I(-7, 3)) == I(5, 5));
  CHECK(interval_horner(IntPoly{}, I(-7, 3)) == I(0, 0));
}

TEST_CASE("width bound examples") {
  CHECK(horner_width_bound(1, 0, Q(1, 2), Q(1)) == 1);
  CHECK(horner_width_bound(2, 3, Q(1, 4), Q(2)) == 16);
  CHECK(horner_width_bound(0, 5, Q(1, 4), Q(9)) == 0);
  CHECK(horner_width_bound(3, 0, Q(1, 4), Q(-1, 2)) == 2);  // max(1, |alpha|) floors at 1
  CHECK_THROWS_AS(horner_width_bound(2, 1, Q(2), Q(1)), PreconditionError);
  CHECK_THROWS_AS(horner_width_bound(2, 1, Q(0), Q(1)), PreconditionError);
}

TEST_CASE("horner containment and width property") {
  oracle::Random rnd(12);
  for (int t = 0; t < 200; ++t) {
    const int d = static_cast<int>(rnd.uniform(0, 12));
    const IntPoly h = rnd.poly(d, 10, false);
    const Rational lo = rnd.rational(8, 5);
    Rational w = rnd.rational(8, 8);
    w = abs(w);
    while (w >= 2) w /= 2;
    if (w == 0) w = Q(1, 3);
    const Interval box(lo, lo + w);
    const Interval J = interval_horner(h, box);
    for (int s = 0; s < 20; ++s) {
      const Rational a = box.lo + box.width() * Q(rnd.uniform(0, 1000), 1000);
      CHECK(J.contains(h.eval(a)));
    }
    const Rational m = box.magnitude() > 1 ? box.magnitude() : Rational(1);
    CHECK(J.width() <= 2 * horner_width_bound(h.degree(), h.bitsize(), w, m));
  }
}

TEST_CASE("interval results are reproducible") {
  const IntPoly h{3, -7, 0, 2, 1};
  const Interval box(Q(-5, 7), Q(3, 11));
  CHECK(interval_horner(h, box) == interval_horner(h, box));
  CHECK(interval_horner(h, box).to_string() == interval_horner(h, box).to_string());
}
