#include "curvetop/emit.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace curvetop {

namespace {

using Json = nlohmann::ordered_json;

std::string vname(const Vertex& v) {
  return "c" + std::to_string(v.column) + "_r" + std::to_string(v.rank);
}

Json trace_json(const AnalysisTrace& t) {
  Json j;
  j["shear"] = t.shear;
  j["sheared"] = t.sheared;
  j["resultant"] = t.resultant;
  j["fibers"] = Json::array();
  for (const auto& f : t.fibers) {
    j["fibers"].push_back({{"alpha", f.alpha},
                           {"k", f.k},
                           {"points", f.points},
                           {"critical_index", f.critical_index},
                           {"precision", f.precision}});
  }
  j["intermediate"] = t.intermediate;
  j["counts"] = t.counts;
  j["rejected"] = Json::array();
  for (const auto& [s, why] : t.rejected) j["rejected"].push_back({{"shear", s}, {"reason", why}});
  return j;
}

std::string fmt(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Lf", v);
  return buf;
}

}  // namespace

std::string emit_json(const TopologyResult& r, bool with_trace) {
  Json j;
  j["input"] = r.input.to_string();
  j["shear"] = r.trace.shear;
  j["critical_values"] = Json::array();
  for (const auto& I : r.critical_intervals) {
    j["critical_values"].push_back({{"interval", {to_fraction_string(I.lo), to_fraction_string(I.hi)}}});
  }
  j["columns"] = Json::array();
  for (const auto& c : r.graph.columns) {
    Json col;
    col["x"] = to_fraction_string(c.x);
    col["kind"] = c.kind == ColumnKind::critical ? "critical" : "intermediate";
    col["points"] = c.points;
    col["critical_index"] = c.kind == ColumnKind::critical ? Json(c.critical_index) : Json(nullptr);
    j["columns"].push_back(std::move(col));
  }
  j["edges"] = Json::array();
  for (const auto& e : r.graph.edges) {
    j["edges"].push_back({{e.a.column, e.a.rank}, {e.b.column, e.b.rank}});
  }
  const GraphInvariants inv = r.graph.invariants();
  j["invariants"] = {{"components", inv.components}, {"cycle_rank", inv.cycle_rank}};
  if (with_trace) j["trace"] = trace_json(r.trace);
  return j.dump(2) + "\n";
}

std::string emit_trace_json(const AnalysisTrace& trace) { return trace_json(trace).dump(2) + "\n"; }

std::string emit_dot(const TopologyGraph& g) {
  std::ostringstream os;
  os << "graph curve {\n";
  for (std::size_t c = 0; c < g.columns.size(); ++c) {
    for (int r = 0; r < g.columns[c].points; ++r) {
      os << "  " << vname({static_cast<int>(c), r}) << ";\n";
    }
  }
  for (const auto& e : g.edges) os << "  " << vname(e.a) << " -- " << vname(e.b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_svg(const TopologyGraph& g) {
  constexpr long double W = 800, H = 600, M = 40;
  // Data coordinates per vertex.
  std::vector<std::vector<std::pair<long double, long double>>> pos(g.columns.size());
  long double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (std::size_t c = 0; c < g.columns.size(); ++c) {
    const Column& col = g.columns[c];
    const long double x = to_long_double(col.x);
    for (int r = 0; r < col.points; ++r) {
      const long double y = static_cast<std::size_t>(r) < col.y.size()
                                ? to_long_double(col.y[static_cast<std::size_t>(r)])
                                : static_cast<long double>(r);
      pos[c].emplace_back(x, y);
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const long double sx = xmax > xmin ? (W - 2 * M) / (xmax - xmin) : 1;
  const long double sy = ymax > ymin ? (H - 2 * M) / (ymax - ymin) : 1;
  auto px = [&](long double x) { return fmt(M + (x - xmin) * sx); };
  auto py = [&](long double y) { return fmt(H - M - (y - ymin) * sy); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\"" << fmt(H)
     << "\" viewBox=\"0 0 800 600\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : g.edges) {
    const auto& a = pos[static_cast<std::size_t>(e.a.column)][static_cast<std::size_t>(e.a.rank)];
    const auto& b = pos[static_cast<std::size_t>(e.b.column)][static_cast<std::size_t>(e.b.rank)];
    os << "  <line x1=\"" << px(a.first) << "\" y1=\"" << py(a.second) << "\" x2=\"" << px(b.first)
       << "\" y2=\"" << py(b.second) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t c = 0; c < g.columns.size(); ++c) {
    const Column& col = g.columns[c];
    for (int r = 0; r < col.points; ++r) {
      const auto& p = pos[c][static_cast<std::size_t>(r)];
      const bool special = col.kind == ColumnKind::critical && r + 1 == col.critical_index;
      os << "  <circle id=\"" << vname({static_cast<int>(c), r}) << "\" cx=\"" << px(p.first)
         << "\" cy=\"" << py(p.second) << "\" r=\"" << (special ? "4" : "3") << "\" fill=\""
         << (special ? "red" : "black") << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit(const TopologyResult& result, OutputFormat format, bool with_trace) {
  switch (format) {
    case OutputFormat::json:
      return emit_json(result, with_trace);
    case OutputFormat::dot:
      return emit_dot(result.graph);
    case OutputFormat::svg:
      return emit_svg(result.graph);
  }
  return {};
}

}  // namespace curvetop
