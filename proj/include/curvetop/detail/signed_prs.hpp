#pragma once

// Signed subresultant sequence with cofactors over an integral domain D,
// for polynomials in D[y] stored densely (index = power of y). Instantiated
// for D = Z (univariate chains, gcd) and D = Z[x] (the bivariate chain).
//
// Convention: sres[p] = P, sres[p-1] = Q, principal[p] = 1, and for j < p the
// determinantal signed subresultants. Defective positions (degree drops)
// follow the gap structure of the chain: sres[j-1] keeps the defective polynomial of
// degree k < j-1, sres[k] is its scaled copy and the indices in between are 0.

#include "curvetop/errors.hpp"
#include "curvetop/upoly.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace curvetop::detail {

template <class C>
struct RingOps;

template <>
struct RingOps<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
};

template <>
struct RingOps<IntPoly> {
  static IntPoly zero() { return {}; }
  static IntPoly one() { return IntPoly::constant(1); }
  static bool is_zero(const IntPoly& a) { return a.is_zero(); }
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    return exact_divide(a, b);
  }
};

template <class C>
using YPoly = std::vector<C>;

template <class C>
void trim(YPoly<C>& p) {
  while (!p.empty() && RingOps<C>::is_zero(p.back())) p.pop_back();
}

template <class C>
int ydeg(const YPoly<C>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class C>
YPoly<C> add(const YPoly<C>& a, const YPoly<C>& b) {
  YPoly<C> r(std::max(a.size(), b.size()), RingOps<C>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

template <class C>
YPoly<C> sub(const YPoly<C>& a, const YPoly<C>& b) {
  YPoly<C> r(std::max(a.size(), b.size()), RingOps<C>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

template <class C>
YPoly<C> mul(const YPoly<C>& a, const YPoly<C>& b) {
  if (a.empty() || b.empty()) return {};
  YPoly<C> r(a.size() + b.size() - 1, RingOps<C>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (RingOps<C>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (RingOps<C>::is_zero(b[j])) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

template <class C>
YPoly<C> scale(const YPoly<C>& a, const C& c) {
  if (RingOps<C>::is_zero(c)) return {};
  YPoly<C> r(a);
  for (auto& x : r) x = x * c;
  trim(r);
  return r;
}

template <class C>
YPoly<C> divide_scalar(const YPoly<C>& a, const C& c) {
  YPoly<C> r(a);
  for (auto& x : r) x = RingOps<C>::exact_div(x, c);
  return r;
}

template <class C>
YPoly<C> negate(const YPoly<C>& a) {
  YPoly<C> r(a);
  for (auto& x : r) x = RingOps<C>::zero() - x;
  return r;
}

template <class C>
C power(const C& base, int e) {
  C r = RingOps<C>::one();
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
template <class C>
std::pair<YPoly<C>, YPoly<C>> pseudo_divide(const YPoly<C>& a,
                                            const YPoly<C>& b) {
  if (b.empty()) throw PreconditionError("pseudo-division by zero");
  const int db = ydeg(b);
  int da = ydeg(a);
  if (da < db) return {{}, a};
  const C& lb = b.back();
  int e = da - db + 1;
  YPoly<C> q(static_cast<std::size_t>(da - db + 1), RingOps<C>::zero());
  YPoly<C> r = a;
  while (!r.empty() && ydeg(r) >= db) {
    const int shift = ydeg(r) - db;
    const C lr = r.back();
    for (auto& x : q) x = x * lb;
    q[static_cast<std::size_t>(shift)] = q[static_cast<std::size_t>(shift)] + lr;
    for (auto& x : r) x = x * lb;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(i + shift)];
      slot = slot - lr * b[static_cast<std::size_t>(i)];
    }
    trim(r);
    --e;
  }
  const C f = power(lb, e);
  for (auto& x : q) x = x * f;
  for (auto& x : r) x = x * f;
  trim(q);
  trim(r);
  return {std::move(q), std::move(r)};
}

template <class C>
struct SignedPrs {
  int p = 0;
  std::vector<YPoly<C>> sres;       // 0..p
  std::vector<C> principal;         // 0..p, principal[p] = 1
  std::vector<YPoly<C>> u, v;       // sres[j] = u[j] P + v[j] Q
  bool with_cofactors = false;
};

/// Signed subresultants of P and Q with deg Q < deg P.
template <class C>
SignedPrs<C> signed_subresultants(const YPoly<C>& P, const YPoly<C>& Q,
                                  bool with_cofactors) {
  using R = RingOps<C>;
  const int p = ydeg(P);
  const int q = ydeg(Q);
  if (p < 1) throw PreconditionError("subresultants need deg P >= 1");
  if (q >= p) throw PreconditionError("subresultants need deg Q < deg P");

  SignedPrs<C> out;
  out.p = p;
  out.with_cofactors = with_cofactors;
  const auto n = static_cast<std::size_t>(p + 1);
  out.sres.assign(n, {});
  out.principal.assign(n, R::zero());
  std::vector<C> t(n, R::zero());
  if (with_cofactors) {
    out.u.assign(n, {});
    out.v.assign(n, {});
  }

  out.sres[p] = P;
  out.principal[p] = R::one();
  t[p] = R::one();
  if (with_cofactors) out.u[p] = {R::one()};
  out.sres[p - 1] = Q;
  if (with_cofactors) out.v[p - 1] = {R::one()};
  if (Q.empty()) return out;
  t[p - 1] = Q.back();

  int i = p + 1;
  int j = p;
  while (!out.sres[j - 1].empty()) {
    const int k = ydeg(out.sres[j - 1]);
    C c;
    if (k == j - 1) {
      out.principal[j - 1] = t[j - 1];
      c = t[j - 1] * t[j - 1];
    } else {
      out.principal[j - 1] = R::zero();
      for (int d = 1; d <= j - k - 1; ++d) {
        C val = R::exact_div(t[j - 1] * t[j - d], out.principal[j]);
        if (d % 2 == 1) val = R::zero() - val;
        t[j - d - 1] = val;
      }
      out.principal[k] = t[k];
      out.sres[k] = divide_scalar(scale(out.sres[j - 1], out.principal[k]), t[j - 1]);
      if (with_cofactors) {
        out.u[k] = divide_scalar(scale(out.u[j - 1], out.principal[k]), t[j - 1]);
        out.v[k] = divide_scalar(scale(out.v[j - 1], out.principal[k]), t[j - 1]);
      }
      c = t[j - 1] * out.principal[k];
    }
    if (k == 0) break;

    const YPoly<C>& A = out.sres[i - 1];
    const YPoly<C>& B = out.sres[j - 1];
    auto [pq, pr] = pseudo_divide(A, B);
    const C be = power(B.back(), ydeg(A) - ydeg(B) + 1);
    // sres[k-1] = -Rem(c A, B) / (s_j t_{i-1}) and Rem(c A, B) = c prem / be.
    // In the regular case c == be and the scaling cancels.
    const bool regular = (k == j - 1);
    const C den = regular ? C(out.principal[j] * t[i - 1])
                          : C(be * out.principal[j] * t[i - 1]);
    auto finish = [&](const YPoly<C>& num) {
      return negate(divide_scalar(regular ? num : scale(num, c), den));
    };
    out.sres[k - 1] = finish(pr);
    if (with_cofactors) {
      auto combine = [&](const YPoly<C>& ca, const YPoly<C>& cb) {
        return finish(sub(scale(ca, be), mul(pq, cb)));
      };
      out.u[k - 1] = combine(out.u[i - 1], out.u[j - 1]);
      out.v[k - 1] = combine(out.v[i - 1], out.v[j - 1]);
    }
    if (!out.sres[k - 1].empty()) t[k - 1] = out.sres[k - 1].back();
    i = j;
    j = k;
  }
  return out;
}

}  // namespace curvetop::detail
