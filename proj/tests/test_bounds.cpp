#include "curvetop/bounds.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace curvetop;

namespace {

RootGraph graph_of(std::vector<Complex> roots, std::vector<std::pair<int, int>> edges) {
  RootGraph g;
  g.roots = std::move(roots);
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("Mahler measure") {
  CHECK(mahler_measure(IntPoly{-2, 0, 1}) == doctest::Approx(2.0));
  CHECK(mahler_measure(IntPoly{0, 2}) == doctest::Approx(2.0));
  CHECK(mahler_measure(IntPoly{-1, 1}) == doctest::Approx(1.0));
  // (x - 3)^2 (x + 1/2) scaled: Mea = 2 * 9
  CHECK(mahler_measure(IntPoly{-3, 1} * IntPoly{-3, 1} * IntPoly{1, 2}) == doctest::Approx(18.0));
}

TEST_CASE("numeric roots have small residuals") {
  oracle::Random rnd(81);
  for (int t = 0; t < 50; ++t) {
    const IntPoly g = squarefree_part(rnd.poly(static_cast<int>(rnd.uniform(1, 8)), 8));
    if (g.degree() < 1) continue;
    const auto z = numeric_roots(g);
    REQUIRE(static_cast<int>(z.size()) == g.degree());
    for (const auto& r : z) {
      Complex v = 0, dv = 0;
      for (int i = g.degree(); i >= 0; --i) {
        dv = dv * r + v;
        v = v * r + static_cast<long double>(g.coeffs()[static_cast<std::size_t>(i)].get_d());
      }
      // Newton step size as the error estimate
      CHECK(std::abs(v / dv) < 1e-12L * std::max(1.0L, std::abs(r)));
    }
  }
}

TEST_CASE("inequality examples") {
  const IntPoly g{-1, 0, 1};
  const RootGraph none = graph_of({Complex(-1, 0), Complex(1, 0)}, {});
  CHECK(none.valid());
  CHECK(none.edge_product() == 1);
  CHECK(1 >= davenport_mahler_rhs(g, none));

  const RootGraph one = graph_of({Complex(-1, 0), Complex(1, 0)}, {{0, 1}});
  CHECK(one.valid());
  CHECK(one.edge_product() == doctest::Approx(2.0));
  CHECK(one.edge_product() >= davenport_mahler_rhs(g, one));

  const IntPoly h{1, 0, 1};
  const RootGraph conj = graph_of({Complex(0, -1), Complex(0, 1)}, {{0, 1}});
  CHECK(conj.edge_product() == doctest::Approx(2.0));
  CHECK(conj.edge_product() >= davenport_mahler_rhs(h, conj));

  CHECK(check_dm_inequality(IntPoly{-3, 1}));
  CHECK(check_dm_inequality(IntPoly{-3, 1} * IntPoly{-3, 1}));
}

TEST_CASE("root graph validity") {
  CHECK_FALSE(graph_of({Complex(1, 0), Complex(2, 0)}, {{1, 0}}).valid());
  CHECK_FALSE(graph_of({Complex(1, 0), Complex(1, 0)}, {{0, 1}, {1, 0}}).valid());
  CHECK_FALSE(graph_of({Complex(1, 0), Complex(2, 0), Complex(3, 0)}, {{0, 2}, {1, 2}}).valid());
  const RootGraph ns = nearest_smaller_root_graph({Complex(3, 0), Complex(-1, 0), Complex(0, 2)});
  CHECK(ns.valid());
  CHECK(ns.edges.size() == 2);
}

TEST_CASE("right-hand side decreases with added edges") {
  const IntPoly g = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
  const std::vector<Complex> z{Complex(1, 0), Complex(2, 0), Complex(3, 0)};
  const long double r0 = davenport_mahler_rhs(g, graph_of(z, {}));
  const long double r1 = davenport_mahler_rhs(g, graph_of(z, {{0, 1}}));
  const long double r2 = davenport_mahler_rhs(g, graph_of(z, {{0, 1}, {1, 2}}));
  CHECK(r1 < r0);
  CHECK(r2 < r1);
  CHECK(r1 / r0 == doctest::Approx(std::sqrt(3.0L) / 3));
}

TEST_CASE("inequality on random and clustered polynomials") {
  oracle::Random rnd(82);
  for (int t = 0; t < 100; ++t) {
    CHECK(check_dm_inequality(rnd.poly(static_cast<int>(rnd.uniform(1, 8)), 8)));
  }
  // Chebyshev T_8 and a Mignotte-type polynomial with two very close roots
  CHECK(check_dm_inequality(IntPoly{1, 0, -32, 0, 160, 0, -256, 0, 128}));
  CHECK(check_dm_inequality(IntPoly{0, 0, 0, 0, 0, 0, 0, 0, 1} - 2 * (IntPoly{-1, 10} * IntPoly{-1, 10})));
}
