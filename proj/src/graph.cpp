#include "curvetop/graph.hpp"

#include "curvetop/errors.hpp"

#include <algorithm>
#include <numeric>

namespace curvetop {

int TopologyGraph::vertex_count() const {
  int n = 0;
  for (const auto& c : columns) n += c.points;
  return n;
}

int TopologyGraph::vertex_id(const Vertex& v) const {
  int id = 0;
  for (int c = 0; c < v.column; ++c) id += columns[static_cast<std::size_t>(c)].points;
  return id + v.rank;
}

std::vector<int> TopologyGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(vertex_id(e.a))];
    ++deg[static_cast<std::size_t>(vertex_id(e.b))];
  }
  return deg;
}

GraphInvariants TopologyGraph::invariants() const {
  GraphInvariants inv;
  inv.vertices = vertex_count();
  inv.edges = static_cast<int>(edges.size());
  std::vector<int> parent(static_cast<std::size_t>(inv.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = inv.vertices;
  for (const auto& e : edges) {
    const int a = find(vertex_id(e.a));
    const int b = find(vertex_id(e.b));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  inv.components = components;
  inv.cycle_rank = inv.edges - inv.vertices + inv.components;
  return inv;
}

std::vector<Edge> connect_columns(const std::vector<int>& counts,
                                  const std::vector<std::pair<int, int>>& critical) {
  if (counts.size() != critical.size() + 1) {
    throw PreconditionError("need one arc count per intermediate column");
  }
  std::vector<Edge> edges;
  if (critical.empty()) {
    for (int r = 0; r < counts[0]; ++r) edges.push_back({{0, r}, {1, r}});
    return edges;
  }
  // Target rank in a critical column for intermediate rank r.
  auto target = [](int r, int a, int m, int c) {
    if (r < c - 1) return r;
    if (r >= a - (m - c)) return r - a + m;
    return c - 1;
  };
  for (std::size_t i = 0; i < critical.size(); ++i) {
    const auto [m, c] = critical[i];
    const int left = counts[i];
    const int right = counts[i + 1];
    if (left < m - 1 || right < m - 1) {
      throw DelineabilityViolation("critical fiber " + std::to_string(i + 1) + " has " +
                                   std::to_string(m) + " points but adjacent arc counts " +
                                   std::to_string(left) + " and " + std::to_string(right));
    }
    if (c < 1 || c > m) throw PreconditionError("critical index out of range");
    const int col = static_cast<int>(2 * i + 1);
    for (int r = 0; r < left; ++r) edges.push_back({{col - 1, r}, {col, target(r, left, m, c)}});
    for (int r = 0; r < right; ++r) edges.push_back({{col, target(r, right, m, c)}, {col + 1, r}});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::string> verify_graph(const TopologyGraph& g) {
  std::vector<std::string> bad;
  const int ncol = static_cast<int>(g.columns.size());
  auto col = [&g](int c) -> const Column& { return g.columns[static_cast<std::size_t>(c)]; };

  // Alternation: intermediate, critical, ..., intermediate; or two samples.
  if (ncol == 0 || (ncol % 2 == 0 && ncol != 2)) {
    bad.push_back("unexpected number of columns: " + std::to_string(ncol));
    return bad;
  }
  for (int c = 0; c < ncol; ++c) {
    const bool want_critical = ncol != 2 && c % 2 == 1;
    if ((col(c).kind == ColumnKind::critical) != want_critical) {
      bad.push_back("column " + std::to_string(c) + " has the wrong kind");
    }
  }
  if (ncol == 2 && col(0).points != col(1).points) {
    bad.push_back("sample columns of a curve without critical values differ");
  }
  if (!bad.empty()) return bad;

  for (const auto& e : g.edges) {
    if (e.a.column + 1 != e.b.column || e.a.column < 0 || e.b.column >= ncol ||
        e.a.rank < 0 || e.b.rank < 0 || e.a.rank >= col(e.a.column).points ||
        e.b.rank >= col(e.b.column).points) {
      bad.push_back("edge outside adjacent columns: c" + std::to_string(e.a.column) + "_r" +
                    std::to_string(e.a.rank) + " -- c" + std::to_string(e.b.column) + "_r" +
                    std::to_string(e.b.rank));
    }
  }
  if (!bad.empty()) return bad;

  // Non-crossing.
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size() && sorted[j].a.column == sorted[i].a.column; ++j) {
      if (sorted[i].a.rank < sorted[j].a.rank && sorted[i].b.rank > sorted[j].b.rank) {
        bad.push_back("crossing edges between columns " + std::to_string(sorted[i].a.column) +
                      " and " + std::to_string(sorted[i].a.column + 1));
      }
    }
  }

  // Degree law, delineability, fiber cardinality.
  const std::vector<int> deg = g.degrees();
  for (int c = 0; c < ncol; ++c) {
    const Column& k = col(c);
    for (int r = 0; r < k.points; ++r) {
      const int d = deg[static_cast<std::size_t>(g.vertex_id({c, r}))];
      const std::string where = "c" + std::to_string(c) + "_r" + std::to_string(r);
      if (k.kind == ColumnKind::intermediate) {
        const bool boundary = (c == 0 || c == ncol - 1);
        if (boundary ? d > 1 : d != 2) {
          bad.push_back("intermediate vertex " + where + " has degree " + std::to_string(d));
        }
      } else {
        const int L = col(c - 1).points;
        const int R = col(c + 1).points;
        const int want = (r + 1 == k.critical_index) ? (L - k.points + 1) + (R - k.points + 1) : 2;
        if (d != want) {
          bad.push_back("critical-column vertex " + where + " has degree " + std::to_string(d) +
                        ", expected " + std::to_string(want));
        }
      }
    }
    if (k.kind == ColumnKind::critical) {
      if (k.points < 1 || k.critical_index < 1 || k.critical_index > k.points) {
        bad.push_back("column " + std::to_string(c) + " has critical index " +
                      std::to_string(k.critical_index) + " for " + std::to_string(k.points) +
                      " points");
      }
      if (col(c - 1).points < k.points - 1 || col(c + 1).points < k.points - 1) {
        bad.push_back("delineability violated at column " + std::to_string(c));
      }
      if (g.curve_degree > 0 && k.points > g.curve_degree - k.gcd_degree) {
        bad.push_back("column " + std::to_string(c) + " has more than n - k points");
      }
    }
  }
  return bad;
}

}  // namespace curvetop
