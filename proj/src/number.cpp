#include "curvetop/number.hpp"

#include "curvetop/errors.hpp"

#include <cmath>

namespace curvetop {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw PreconditionError("malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw PreconditionError("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Rational next_pow2(const Rational& q) {
  if (q <= 0) throw PreconditionError("next_pow2 requires a positive value");
  long e = 0;
  Rational p(1);
  while (p < q) {
    p *= 2;
    ++e;
  }
  while (p / 2 >= q) {
    p /= 2;
    --e;
  }
  return p;
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  mpq_div_2exp(m.get_mpq_t(), m.get_mpq_t(), 1);
  return m;
}

Rational simplest_dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("empty open interval");
  if (lo < 0 && hi > 0) return Rational(0);
  for (unsigned long k = 0;; ++k) {
    const Rational scale = pow2(static_cast<long>(k));
    const Rational a = lo * scale;
    const Rational b = hi * scale;
    Integer m;
    if (lo >= 0) {
      m = floor_of(a) + 1;
      if (m < b) return Rational(m) / scale;
    } else {
      m = ceil_of(b) - 1;
      if (m > a) return Rational(m) / scale;
    }
  }
}

Rational round_down_dyadic(const Rational& q, unsigned long bits) {
  const Rational scale = pow2(static_cast<long>(bits));
  return Rational(floor_of(q * scale)) / scale;
}

Rational round_up_dyadic(const Rational& q, unsigned long bits) {
  const Rational scale = pow2(static_cast<long>(bits));
  return Rational(ceil_of(q * scale)) / scale;
}

long double to_long_double(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

long double to_long_double(const Rational& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

}  // namespace curvetop
