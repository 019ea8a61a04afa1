#pragma once

#include "curvetop/interval.hpp"
#include "curvetop/number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvetop {

enum class ColumnKind { intermediate, critical };

struct Column {
  ColumnKind kind = ColumnKind::intermediate;
  /// Sample x for intermediate columns; for critical columns the midpoint
  /// of the isolating interval in `x_interval`.
  Rational x;
  std::optional<Interval> x_interval;
  int points = 0;
  /// 1-based rank of the multiple root; 0 for intermediate columns.
  int critical_index = 0;
  /// gcd degree k of the fiber; 0 for intermediate columns.
  int gcd_degree = 0;
  /// Plot ordinates, one per point (may be empty).
  std::vector<Rational> y;
};

struct Vertex {
  int column = 0;
  int rank = 0;  // 0-based, bottom-up
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Always stored with a.column + 1 == b.column.
struct Edge {
  Vertex a;
  Vertex b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct GraphInvariants {
  int vertices = 0;
  int edges = 0;
  int components = 0;
  int cycle_rank = 0;
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

struct TopologyGraph {
  std::vector<Column> columns;
  std::vector<Edge> edges;
  int curve_degree = 0;

  int vertex_count() const;
  /// Flat vertex id: points of earlier columns plus rank.
  int vertex_id(const Vertex& v) const;
  std::vector<int> degrees() const;
  GraphInvariants invariants() const;
};

/// Columns q_0, alpha_1, q_1, ..., alpha_m, q_m. counts has m+1 entries
/// (points per intermediate column); critical[i] = (points, critical_index)
/// of the i-th critical column. Throws DelineabilityViolation when an
/// adjacent count is below points - 1.
std::vector<Edge> connect_columns(const std::vector<int>& counts,
                                  const std::vector<std::pair<int, int>>& critical);

/// Structural checks: adjacency, column alternation, degree law, non-crossing
/// edges, delineability and fiber cardinality. Returns one message per
/// violation.
std::vector<std::string> verify_graph(const TopologyGraph& g);

}  // namespace curvetop
