#include "curvetop/isolate.hpp"

#include "curvetop/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace curvetop {

namespace {

using Coeffs = std::vector<Integer>;

// c(t) -> c(t + a)
void taylor_shift(Coeffs& c, const Integer& a) {
  const std::size_t n = c.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2;; --j) {
      if (a == 1) {
        c[j] += c[j + 1];
      } else {
        c[j] += a * c[j + 1];
      }
      if (j == i) break;
    }
  }
}

int sign_variations(const Coeffs& c) {
  int v = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Upper bound on the number of roots of q in (0, 1), exact when 0 or 1.
int descartes_01(const Coeffs& q) {
  Coeffs r(q.rbegin(), q.rend());
  taylor_shift(r, 1);
  return sign_variations(r);
}

// 2^d q(t / 2)
Coeffs halve(const Coeffs& q) {
  Coeffs out(q);
  const std::size_t d = q.size() - 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_mul_2exp(out[i].get_mpz_t(), q[i].get_mpz_t(), static_cast<mp_bitcnt_t>(d - i));
  }
  return out;
}

struct RawRoot {
  Integer c;  // interval [c / 2^k, (c + 1) / 2^k] in t, or point (c / 2^k)
  long k;
  bool point;
};

void vca(const Coeffs& q, const Integer& c, long k, std::vector<RawRoot>& out) {
  const int v = descartes_01(q);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({c, k, false});
    return;
  }
  Coeffs left = halve(q);
  Coeffs right = left;
  taylor_shift(right, 1);
  vca(left, 2 * c, k + 1, out);
  if (right.front() == 0) out.push_back({2 * c + 1, k + 1, true});
  vca(right, 2 * c + 1, k + 1, out);
}

// Sign of g just to the right of x (g square-free, so a root there is simple).
int sign_right_of(const IntPoly& g, const IntPoly& dg, const Rational& x) {
  const int s = g.sign_at(x);
  return s != 0 ? s : dg.sign_at(x);
}

int sign_left_of(const IntPoly& g, const IntPoly& dg, const Rational& x) {
  const int s = g.sign_at(x);
  return s != 0 ? s : -dg.sign_at(x);
}

// Bisect until width <= eps, or until both endpoints are non-roots when
// eps is null. Signs are one-sided limits at the endpoints.
IsolatingInterval bisect(const IntPoly& g, IsolatingInterval I, int slo, int shi,
                         const Rational* eps) {
  if (slo == 0 || shi == 0 || slo == shi) {
    throw PreconditionError("interval " + Interval(I.lo, I.hi).to_string() +
                            " does not isolate a simple root");
  }
  auto done = [&]() {
    if (eps != nullptr) return I.hi - I.lo <= *eps;
    return g.sign_at(I.lo) != 0 && g.sign_at(I.hi) != 0;
  };
  while (!done()) {
    const Rational m = midpoint(I.lo, I.hi);
    const int s = g.sign_at(m);
    if (s == 0) {
      I.lo = I.hi = m;
      return I;
    }
    if (s == slo) {
      I.lo = m;
    } else {
      I.hi = m;
    }
  }
  return I;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("isolating the roots of the zero polynomial");
  if (g.degree() < 1) return {};
  const IntPoly p = squarefree_part(g);
  const IntPoly dp = p.derivative();
  if (p.degree() < 1) return {};
  const Rational bound = cauchy_root_bound(p);
  const Integer B = next_pow2(bound).get_num();

  // q(t) = p(2B t - B)
  Coeffs q = p.coeffs();
  taylor_shift(q, -B);
  Integer scale = 1;
  const Integer twoB = 2 * B;
  for (auto& c : q) {
    c *= scale;
    scale *= twoB;
  }

  std::vector<RawRoot> raw;
  vca(q, 0, 0, raw);

  std::vector<IsolatingInterval> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    // x = -B + 2B c / 2^k
    const Rational lo = Rational(-B) + Rational(twoB * r.c) * pow2(-r.k);
    if (r.point) {
      out.push_back({lo, lo, std::nullopt});
      continue;
    }
    const Rational hi = lo + Rational(twoB) * pow2(-r.k);
    IsolatingInterval I{lo, hi, std::nullopt};
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
      I = bisect(p, I, sign_right_of(p, dp, lo), sign_left_of(p, dp, hi), nullptr);
    }
    // keep every interval inside the root bound so that sample points
    // placed beyond it stay outside all intervals
    while (!I.is_point() && (I.lo < -bound || I.hi > bound)) {
      const Rational half = I.width() / 2;
      I = refine_isolating(p, std::move(I), half);
    }
    out.push_back(std::move(I));
  }
  return out;
}

IsolatingInterval refine_isolating(const IntPoly& squarefree_g, IsolatingInterval I,
                                   const Rational& eps) {
  if (I.is_point() || I.width() <= eps) return I;
  const IntPoly dg = squarefree_g.derivative();
  const int slo = sign_right_of(squarefree_g, dg, I.lo);
  const int shi = sign_left_of(squarefree_g, dg, I.hi);
  return bisect(squarefree_g, std::move(I), slo, shi, &eps);
}

std::vector<IsolatingInterval> refine_to_width(const IntPoly& g,
                                               std::vector<IsolatingInterval> intervals,
                                               const Rational& eps) {
  if (intervals.empty()) return intervals;
  const IntPoly p = squarefree_part(g);
  for (auto& I : intervals) I = refine_isolating(p, std::move(I), eps);
  return intervals;
}

std::vector<Rational> intermediate_points(const IntPoly& g,
                                          std::vector<IsolatingInterval> intervals) {
  if (intervals.empty()) return {Rational(0)};
  const IntPoly p = squarefree_part(g);
  const Rational outer = Rational(ceil_of(cauchy_root_bound(p)) + 1);
  std::vector<Rational> qs;
  qs.reserve(intervals.size() + 1);
  qs.push_back(-outer);
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    auto& a = intervals[i];
    auto& b = intervals[i + 1];
    if (a.hi == b.lo && p.sign_at(a.hi) != 0) {
      qs.push_back(a.hi);
      continue;
    }
    while (a.hi >= b.lo) {
      if (!a.is_point()) a = refine_isolating(p, a, a.width() / 2);
      if (a.hi >= b.lo && !b.is_point()) b = refine_isolating(p, b, b.width() / 2);
      if (a.is_point() && b.is_point() && a.hi >= b.lo) {
        throw PreconditionError("overlapping isolating intervals");
      }
    }
    qs.push_back(simplest_dyadic_between(a.hi, b.lo));
  }
  qs.push_back(outer);
  return qs;
}

std::vector<Interval> ExactCoeffOracle::query(unsigned long /*precision*/) {
  std::vector<Interval> out;
  out.reserve(g_.coeffs().size());
  for (const auto& c : g_.coeffs()) out.push_back(Interval::point(Rational(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Interval-coefficient Descartes bisection

BitstreamIsolator::BitstreamIsolator(std::shared_ptr<CoeffOracle> oracle,
                                     unsigned long max_precision)
    : oracle_(std::move(oracle)), max_precision_(max_precision) {
  if (!oracle_) throw PreconditionError("null coefficient oracle");
  fetch(precision_);
  while (!isolate_at_current_precision()) raise_precision(0);
}

void BitstreamIsolator::fetch(unsigned long precision) {
  coeffs_ = oracle_->query(precision);
  if (static_cast<int>(coeffs_.size()) != oracle_->degree() + 1) {
    throw PreconditionError("coefficient oracle returned the wrong number of coefficients");
  }
}

void BitstreamIsolator::raise_precision(std::size_t pending) {
  if (precision_ * 2 > max_precision_) {
    throw PrecisionOverflow("bitstream isolation exceeded the precision cap", precision_,
                            pending);
  }
  precision_ *= 2;
  fetch(precision_);
}

Interval BitstreamIsolator::value_at(const Rational& x) const {
  Interval acc = coeffs_.back();
  for (std::size_t j = coeffs_.size() - 1; j-- > 0;) acc = x * acc + coeffs_[j];
  return acc;
}

std::pair<int, int> BitstreamIsolator::variations(const Rational& lo, const Rational& hi) const {
  const std::size_t d = coeffs_.size() - 1;
  // T(t) = sum_j P_j (lo + hi t)^j (1 + t)^(d - j)
  std::vector<Interval> T(d + 1, Interval::point(0));
  std::vector<Rational> apow{Rational(1)};  // (lo + hi t)^j
  for (std::size_t j = 0; j <= d; ++j) {
    if (j > 0) {
      std::vector<Rational> next(apow.size() + 1, Rational(0));
      for (std::size_t i = 0; i < apow.size(); ++i) {
        next[i] += apow[i] * lo;
        next[i + 1] += apow[i] * hi;
      }
      apow = std::move(next);
    }
    // times (1 + t)^(d - j)
    std::vector<Rational> c = apow;
    for (std::size_t r = 0; r < d - j; ++r) {
      c.push_back(0);
      for (std::size_t i = c.size() - 1; i > 0; --i) c[i] += c[i - 1];
    }
    for (std::size_t k = 0; k <= d; ++k) {
      if (c[k] != 0) T[k] = T[k] + c[k] * coeffs_[j];
    }
  }
  // Range of sign variations over all sign choices consistent with T.
  constexpr int kInf = 1 << 28;
  std::array<int, 3> mn{0, kInf, kInf};  // state: none, +, -
  std::array<int, 3> mx{0, -kInf, -kInf};
  for (const auto& t : T) {
    std::array<bool, 3> opt{t.contains_zero(), t.hi > 0, t.lo < 0};  // 0, +, -
    std::array<int, 3> nmn{kInf, kInf, kInf};
    std::array<int, 3> nmx{-kInf, -kInf, -kInf};
    for (int s = 0; s < 3; ++s) {
      if (mn[s] >= kInf) continue;
      if (opt[0]) {
        nmn[s] = std::min(nmn[s], mn[s]);
        nmx[s] = std::max(nmx[s], mx[s]);
      }
      for (int ns = 1; ns <= 2; ++ns) {
        if (!opt[ns]) continue;
        const int add = (s != 0 && s != ns) ? 1 : 0;
        nmn[ns] = std::min(nmn[ns], mn[s] + add);
        nmx[ns] = std::max(nmx[ns], mx[s] + add);
      }
    }
    mn = nmn;
    mx = nmx;
  }
  return {*std::min_element(mn.begin(), mn.end()), *std::max_element(mx.begin(), mx.end())};
}

std::optional<std::pair<Rational, int>> BitstreamIsolator::split_point(const Rational& lo,
                                                                       const Rational& hi) const {
  static const std::array<Rational, 5> fractions = {Rational(1, 2), Rational(7, 16),
                                                    Rational(9, 16), Rational(3, 8),
                                                    Rational(5, 8)};
  const Rational w = hi - lo;
  for (const auto& f : fractions) {
    const Rational m = lo + f * w;
    const int s = sign_at(m);
    if (s != 0) return std::make_pair(m, s);
  }
  return std::nullopt;
}

bool BitstreamIsolator::isolate_at_current_precision() {
  roots_.clear();
  root_signs_.clear();
  const int d = oracle_->degree();
  if (d <= 0) return true;
  const Interval& lc = coeffs_.back();
  if (lc.contains_zero()) return false;
  const Rational lc_min = std::min(abs(lc.lo), abs(lc.hi));
  Rational mag = 0;
  for (int j = 0; j < d; ++j) mag = std::max(mag, coeffs_[static_cast<std::size_t>(j)].magnitude());
  const Rational B = next_pow2(1 + mag / lc_min);
  const int s_lo = sign_at(-B);
  const int s_hi = sign_at(B);
  if (s_lo == 0 || s_hi == 0) return false;

  const int depth_cap = static_cast<int>(precision_ / 2);
  std::vector<Node> stack{{-B, B, s_lo, s_hi, 0}};
  std::vector<Node> found;
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    const auto [vmin, vmax] = variations(n.lo, n.hi);
    if (vmax == 0) continue;
    if (vmin == 1 && vmax == 1) {
      if (n.slo == n.shi) return false;
      found.push_back(std::move(n));
      continue;
    }
    if (n.depth >= depth_cap) return false;
    auto split = split_point(n.lo, n.hi);
    if (!split) return false;
    // Right child first so the left one is processed first.
    stack.push_back({split->first, n.hi, split->second, n.shi, n.depth + 1});
    stack.push_back({n.lo, split->first, n.slo, split->second, n.depth + 1});
  }
  for (auto& n : found) {
    roots_.push_back({n.lo, n.hi, std::nullopt});
    root_signs_.emplace_back(n.slo, n.shi);
  }
  return true;
}

void BitstreamIsolator::refine(std::size_t i, const Rational& eps) {
  auto& I = roots_.at(i);
  const int slo = root_signs_.at(i).first;
  while (I.width() > eps) {
    auto split = split_point(I.lo, I.hi);
    if (!split) {
      raise_precision(1);
      continue;
    }
    if (split->second == slo) {
      I.lo = split->first;
    } else {
      I.hi = split->first;
    }
  }
}

void BitstreamIsolator::refine_all(const Rational& eps) {
  for (std::size_t i = 0; i < roots_.size(); ++i) refine(i, eps);
}

std::pair<int, std::vector<IsolatingInterval>> isolate_oracle_poly(
    std::shared_ptr<CoeffOracle> oracle) {
  BitstreamIsolator iso(std::move(oracle));
  return {static_cast<int>(iso.count()), iso.intervals()};
}

}  // namespace curvetop
