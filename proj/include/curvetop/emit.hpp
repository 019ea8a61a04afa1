#pragma once

#include "curvetop/topology.hpp"

#include <string>

namespace curvetop {

enum class OutputFormat { json, dot, svg };

/// Stable JSON document; all rationals as "num/den". With `with_trace` an
/// extra "trace" member is appended after the standard keys.
std::string emit_json(const TopologyResult& result, bool with_trace = false);

/// graph curve { c0_r0 -- c1_r0; ... } with every vertex declared.
std::string emit_dot(const TopologyGraph& graph);

/// Straight-line drawing: column x positions are the column samples, vertex
/// heights the plot ordinates (ranks when none were computed).
std::string emit_svg(const TopologyGraph& graph);

std::string emit_trace_json(const AnalysisTrace& trace);

std::string emit(const TopologyResult& result, OutputFormat format, bool with_trace = false);

}  // namespace curvetop
