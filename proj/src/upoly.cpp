#include "curvetop/upoly.hpp"

#include "curvetop/detail/signed_prs.hpp"
#include "curvetop/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace curvetop {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int exponent) {
  std::vector<Integer> v(static_cast<std::size_t>(exponent) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPoly::lcf() const {
  static const Integer zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

std::size_t IntPoly::bitsize() const {
  std::size_t b = 0;
  for (const auto& c : coeffs_) b = std::max(b, bit_length(c));
  return b;
}

Rational IntPoly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + *it;
  }
  return acc;
}

int IntPoly::sign_at(const Rational& q) const {
  if (coeffs_.empty()) return 0;
  // d^deg * p(n/d) = sum c_i n^i d^(deg-i), Horner in homogeneous form.
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * dpow;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (lcf() < 0) g = -g;
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negated() const {
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reflected() const {
  std::vector<Integer> v(coeffs_);
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

RatPoly RatPoly::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v));
}

IntPoly RatPoly::clear_denominators() const {
  Integer l = 1;
  for (const auto& c : coeffs_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Integer z = c.get_num() * l;
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), c.get_den_mpz_t());
    v.push_back(std::move(z));
  }
  return IntPoly(std::move(v));
}

namespace {

detail::YPoly<Integer> as_ypoly(const IntPoly& p) { return p.coeffs(); }

}  // namespace

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = detail::pseudo_divide(as_ypoly(a), as_ypoly(b));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  return pseudo_divide(a, b).remainder;
}

namespace {

bool try_exact_divide(const IntPoly& a, const IntPoly& b, IntPoly* out) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) {
    *out = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Integer& lb = b.lcf();
  Integer t;
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - db;
    q[static_cast<std::size_t>(shift)] = t;
    for (int k = 0; k <= db; ++k) {
      mpz_submul(r[static_cast<std::size_t>(k + shift)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<std::size_t>(k)].get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return false;
  }
  *out = IntPoly(std::move(q));
  return true;
}

}  // namespace

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_exact_divide(a, b, &q)) {
    throw PreconditionError("inexact polynomial division");
  }
  return q;
}

bool divides(const IntPoly& b, const IntPoly& a) {
  IntPoly q;
  return try_exact_divide(a, b, &q);
}

Rational eval_rational(const IntPoly& g, const Rational& q) { return g.eval(q); }

IntPoly derivative(const IntPoly& g) { return g.derivative(); }

IntPoly gcd_int(const IntPoly& g, const IntPoly& h) {
  if (g.is_zero() && h.is_zero()) {
    throw PreconditionError("gcd of two zero polynomials");
  }
  if (g.is_zero()) return h.primitive_part();
  if (h.is_zero()) return g.primitive_part();
  IntPoly a = g.primitive_part();
  IntPoly b = h.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly::constant(1);
  if (a.degree() == b.degree()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    if (r.is_zero()) return b;
    a = std::move(b);
    b = std::move(r);
    if (b.degree() == 0) return IntPoly::constant(1);
  }
  const auto prs =
      detail::signed_subresultants(as_ypoly(a), as_ypoly(b), /*with_cofactors=*/false);
  for (int j = 0; j <= prs.p; ++j) {
    if (!prs.sres[static_cast<std::size_t>(j)].empty()) {
      IntPoly last(prs.sres[static_cast<std::size_t>(j)]);
      if (last.degree() == 0) return IntPoly::constant(1);
      return last.primitive_part();
    }
  }
  return IntPoly::constant(1);
}

IntPoly squarefree_part(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("square-free part of zero");
  if (g.degree() == 0) return IntPoly::constant(1);
  const IntPoly w = gcd_int(g, g.derivative());
  return exact_divide(g.primitive_part(), w).primitive_part();
}

Rational cauchy_root_bound(const IntPoly& g) {
  if (g.degree() < 1) {
    throw PreconditionError("root bound needs a polynomial of degree >= 1");
  }
  Integer m = 0;
  for (int i = 0; i < g.degree(); ++i) {
    Integer a = abs(g.coeffs()[static_cast<std::size_t>(i)]);
    if (a > m) m = a;
  }
  return Rational(1) + make_rational(m, abs(g.lcf()));
}

Rational mahler_two_norm_bound(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("Mahler bound of zero");
  Integer s = 0;
  for (const auto& c : g.coeffs()) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (r * r < s) r += 1;
  return Rational(r);
}

Integer discriminant(const IntPoly& g) {
  if (g.degree() < 1) return 1;
  const auto prs = detail::signed_subresultants(as_ypoly(g), as_ypoly(g.derivative()),
                                                /*with_cofactors=*/false);
  Integer res = prs.principal[0];
  mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), g.lcf().get_mpz_t());
  return res;
}

}  // namespace curvetop
