#pragma once

// Independent reference implementations used only by tests. None of them
// share code paths with the library routines they check.

#include "curvetop/bipoly.hpp"
#include "curvetop/number.hpp"
#include "curvetop/upoly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using curvetop::BiPoly;
using curvetop::Integer;
using curvetop::IntPoly;
using curvetop::make_rational;
using curvetop::Rational;

// ---------------------------------------------------------------------------
// Random inputs

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Integer integer_bits(int bits) {
    // |c| < 2^bits, uniformly distributed sign and magnitude
    Integer m = 0;
    for (int i = 0; i < bits; ++i) m = 2 * m + uniform(0, 1);
    return uniform(0, 1) ? m : Integer(-m);
  }

  IntPoly poly(int degree, int bits, bool exact_degree = true) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = integer_bits(bits);
    if (exact_degree) {
      while (c.back() == 0) c.back() = integer_bits(bits);
    }
    return IntPoly(std::move(c));
  }

  // Dense bivariate polynomial of total degree n with a nonzero constant
  // coefficient at y^n, so deg f = deg_y f = n.
  BiPoly curve(int n, int bits) {
    std::vector<IntPoly> ycoeffs;
    for (int j = 0; j <= n; ++j) {
      std::vector<Integer> c(static_cast<std::size_t>(n - j) + 1);
      for (auto& x : c) x = integer_bits(bits);
      if (j == n) {
        while (c[0] == 0) c[0] = integer_bits(bits);
      }
      ycoeffs.emplace_back(std::move(c));
    }
    return BiPoly(std::move(ycoeffs));
  }

  Rational rational(int num_bits, int den_bits) {
    Integer d = 0;
    while (d == 0) d = abs(integer_bits(den_bits));
    return make_rational(integer_bits(num_bits), d);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Determinants and subresultants from the Sylvester matrix definition

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return curvetop::exact_divide(a, b); }
inline bool is_zero(const Integer& a) { return a == 0; }
inline bool is_zero(const IntPoly& a) { return a.is_zero(); }

// Fraction-free Gaussian elimination (Bareiss) over an integral domain.
template <typename R>
R determinant(std::vector<std::vector<R>> m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return R();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  if (sign < 0) d = R() - d;
  return d;
}

inline int eps_sign(int m) { return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1; }

// Signed subresultant of index j of P, Q (coefficient vectors in y, lowest
// power first, deg Q < deg P), via determinants of Sylvester submatrices:
// the classical subresultant times (-1)^((p-j)(p-j-1)/2).
template <typename R>
std::vector<R> signed_subresultant(const std::vector<R>& P, const std::vector<R>& Q, int j,
                                   const R& one) {
  const int p = static_cast<int>(P.size()) - 1;
  const int q = static_cast<int>(Q.size()) - 1;
  if (j == p) return P;
  if (j == p - 1) return Q;
  if (j > q) return {};
  const int rows = p + q - 2 * j;
  const int width = p + q - j;  // columns for y^(width-1) .. y^0
  std::vector<std::vector<R>> M(static_cast<std::size_t>(rows), std::vector<R>(static_cast<std::size_t>(width)));
  int r = 0;
  for (int s = q - j - 1; s >= 0; --s, ++r) {
    for (int i = 0; i <= p; ++i) M[r][static_cast<std::size_t>(width - 1 - (i + s))] = P[static_cast<std::size_t>(i)];
  }
  for (int s = p - j - 1; s >= 0; --s, ++r) {
    for (int i = 0; i <= q; ++i) M[r][static_cast<std::size_t>(width - 1 - (i + s))] = Q[static_cast<std::size_t>(i)];
  }
  std::vector<R> out(static_cast<std::size_t>(j) + 1);
  for (int k = 0; k <= j; ++k) {
    std::vector<std::vector<R>> sub(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
      sub[i].assign(M[i].begin(), M[i].begin() + (rows - 1));
      sub[i].push_back(M[i][static_cast<std::size_t>(width - 1 - k)]);
    }
    R d = determinant(std::move(sub), one);
    if (eps_sign(p - j) < 0) d = R() - d;
    out[static_cast<std::size_t>(k)] = d;
  }
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Classical Sturm sequence over Q: number of distinct real roots.

inline std::vector<Rational> rat(const IntPoly& g) {
  std::vector<Rational> c;
  for (const auto& x : g.coeffs()) c.emplace_back(x);
  return c;
}

inline std::vector<Rational> rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

inline int sturm_distinct_real_roots(const IntPoly& g) {
  if (g.degree() < 1) return 0;
  std::vector<std::vector<Rational>> seq{rat(g), rat(g.derivative())};
  while (true) {
    auto r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  auto variations = [&](bool plus_inf) {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      int s = sgn(p.back());
      const int deg = static_cast<int>(p.size()) - 1;
      if (!plus_inf && deg % 2 == 1) s = -s;
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

// ---------------------------------------------------------------------------
// Brute-force topology by sign sampling on a grid over [-4, 4]^2.
//
// A cell is marked when its four corner signs are not all equal and nonzero,
// i.e. it meets the curve. The union of marked closed cells is a cubical
// complex; components come from union-find over 8-neighbourhoods and the
// first Betti number from its Euler characteristic.

struct GridTopology {
  int components = 0;
  int cycle_rank = 0;
  long marked_cells = 0;
};

GridTopology grid_topology(const BiPoly& f, int per_unit = 1000, int half_width = 4);

}  // namespace oracle
