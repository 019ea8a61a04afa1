#pragma once

// Numeric utilities used only to validate the exact code: complex root
// approximation, Mahler measure, and the generalized Davenport-Mahler
// inequality for root products over a directed root graph.

#include "curvetop/upoly.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace curvetop {

using Complex = std::complex<long double>;

/// All complex roots of a square-free g (Aberth iteration plus Newton
/// polishing in long double).
std::vector<Complex> numeric_roots(const IntPoly& g);

/// |lcf(g)| times the product of max(1, |z|) over the roots of g, counted
/// with multiplicity. Works for non-square-free g via the gcd chain
/// g = (g / gcd(g, g')) * gcd(g, g').
long double mahler_measure(const IntPoly& g);

struct RootGraph {
  std::vector<Complex> roots;
  std::vector<std::pair<int, int>> edges;  // (from, to)

  /// Acyclic, |from| <= |to| on every edge (up to tol), in-degree <= 1.
  bool valid(long double tol = 1e-12L) const;
  long double edge_product() const;
};

/// Every root except the smallest in modulus receives one edge from its
/// nearest root among those of smaller (or equal, earlier) modulus.
RootGraph nearest_smaller_root_graph(std::vector<Complex> roots);

/// Right-hand side of the inequality for g of degree n with r distinct roots:
///   sqrt|sres_{n-r}(g,g')| / (sqrt|lcf g| Mea(g)^(r-1))
///   * (sqrt3/r)^#E * (1/r)^(r/2) * (1/sqrt3)^(min(n, 2n-2r)/3).
long double davenport_mahler_rhs(const IntPoly& g, const RootGraph& graph);

/// Builds a valid root graph over the distinct roots of g and checks
/// product >= rhs - 1e-9. Fewer than two distinct roots: true.
bool check_dm_inequality(const IntPoly& g);

}  // namespace curvetop
