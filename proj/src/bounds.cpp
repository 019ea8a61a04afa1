#include "curvetop/bounds.hpp"

#include "curvetop/errors.hpp"
#include "curvetop/subres.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvetop {

namespace {

std::vector<long double> to_ld(const IntPoly& g) {
  std::vector<long double> c;
  c.reserve(g.coeffs().size());
  for (const auto& x : g.coeffs()) c.push_back(to_long_double(x));
  return c;
}

void horner(const std::vector<long double>& c, const Complex& z, Complex& p, Complex& dp) {
  p = c.back();
  dp = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::vector<Complex> numeric_roots(const IntPoly& g) {
  const int d = g.degree();
  if (d < 1) return {};
  const std::vector<long double> c = to_ld(g);
  if (d == 1) return {Complex(-c[0] / c[1], 0)};

  // Start on a circle whose radius is the geometric mean of the root moduli.
  long double radius = std::pow(std::fabs(c[0] / c.back()), 1.0L / d);
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double t = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, t);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex p, dp;
      horner(c, z[i], p, dp);
      if (p == Complex(0)) continue;
      const Complex ratio = p / dp;
      Complex s = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) s += Complex(1) / (z[i] - z[j]);
      }
      const Complex w = ratio / (Complex(1) - ratio * s);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-18L) break;
  }
  for (auto& x : z) {
    for (int k = 0; k < 3; ++k) {
      Complex p, dp;
      horner(c, x, p, dp);
      if (dp == Complex(0)) break;
      x -= p / dp;
    }
  }
  return z;
}

long double mahler_measure(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("Mahler measure of zero");
  long double m = std::fabs(to_long_double(g.lcf()));
  IntPoly rest = g.primitive_part();
  while (rest.degree() >= 1) {
    const IntPoly w = gcd_int(rest, rest.derivative());
    const IntPoly sf = exact_divide(rest, w);
    for (const auto& z : numeric_roots(sf)) m *= std::max(1.0L, std::abs(z));
    rest = w;
  }
  return m;
}

bool RootGraph::valid(long double tol) const {
  std::vector<int> indeg(roots.size(), 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(roots.size()) ||
        b >= static_cast<int>(roots.size()) || a == b) {
      return false;
    }
    if (std::abs(roots[static_cast<std::size_t>(a)]) > std::abs(roots[static_cast<std::size_t>(b)]) + tol) {
      return false;
    }
    if (++indeg[static_cast<std::size_t>(b)] > 1) return false;
  }
  // In-degree <= 1 means following incoming edges backwards is a walk; a
  // cycle shows up as a walk longer than the vertex count.
  std::vector<int> parent(roots.size(), -1);
  for (const auto& [a, b] : edges) parent[static_cast<std::size_t>(b)] = a;
  for (std::size_t v = 0; v < roots.size(); ++v) {
    int x = static_cast<int>(v);
    for (std::size_t steps = 0; x != -1; ++steps) {
      if (steps > roots.size()) return false;
      x = parent[static_cast<std::size_t>(x)];
    }
  }
  return true;
}

long double RootGraph::edge_product() const {
  long double p = 1;
  for (const auto& [a, b] : edges) {
    p *= std::abs(roots[static_cast<std::size_t>(a)] - roots[static_cast<std::size_t>(b)]);
  }
  return p;
}

RootGraph nearest_smaller_root_graph(std::vector<Complex> roots) {
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
  RootGraph g;
  g.roots = std::move(roots);
  for (std::size_t j = 1; j < g.roots.size(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < j; ++i) {
      if (std::abs(g.roots[i] - g.roots[j]) < std::abs(g.roots[best] - g.roots[j])) best = i;
    }
    g.edges.emplace_back(static_cast<int>(best), static_cast<int>(j));
  }
  return g;
}

long double davenport_mahler_rhs(const IntPoly& g, const RootGraph& graph) {
  const int n = g.degree();
  if (n < 2) throw PreconditionError("the inequality needs degree >= 2");
  const int r = squarefree_part(g).degree();
  if (r < 1) throw PreconditionError("polynomial without roots");
  const UnivChain chain = univariate_chain(g, g.derivative());
  const Rational& s = chain.principal[static_cast<std::size_t>(n - r)];
  if (s == 0) throw PreconditionError("sres_{n-r}(g, g') vanishes");
  const long double rr = r;
  const long double sqrt3 = std::sqrt(3.0L);
  long double rhs = std::sqrt(std::fabs(to_long_double(s))) /
                    (std::sqrt(std::fabs(to_long_double(g.lcf()))) *
                     std::pow(mahler_measure(g), rr - 1));
  rhs *= std::pow(sqrt3 / rr, static_cast<long double>(graph.edges.size()));
  rhs *= std::pow(1 / rr, rr / 2);
  rhs *= std::pow(1 / sqrt3, std::min(n, 2 * n - 2 * r) / 3.0L);
  return rhs;
}

bool check_dm_inequality(const IntPoly& g) {
  if (g.degree() < 2) return true;
  const IntPoly sf = squarefree_part(g);
  if (sf.degree() < 2) return true;
  const RootGraph graph = nearest_smaller_root_graph(numeric_roots(sf));
  if (!graph.valid()) return false;
  return graph.edge_product() >= davenport_mahler_rhs(g, graph) - 1e-9L;
}

}  // namespace curvetop
