// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "curvetop/algnum.hpp"
#include "curvetop/bounds.hpp"
#include "curvetop/emit.hpp"
#include "curvetop/errors.hpp"
#include "curvetop/parse.hpp"
#include "curvetop/subres.hpp"
#include "curvetop/topology.hpp"

#include "oracles.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace curvetop;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every pipeline output of the run goes through verify_graph; criterion 9
// reports the total.
long g_graphs_checked = 0;
std::vector<std::string> g_violations;

TopologyResult checked(const BiPoly& F, const TopologyOptions& opt = {}) {
  TopologyResult r = compute_topology(F, opt);
  ++g_graphs_checked;
  for (auto& v : verify_graph(r.graph)) g_violations.push_back(F.to_string() + ": " + v);
  return r;
}

struct Golden {
  const char* name;
  const char* expr;
  // grid oracle input; differs from expr only by a translation when the
  // curve does not fit in the sampling box
  const char* oracle_expr;
  int components, cycle_rank;
  int vertices = -1, edges = -1;  // checked when >= 0
};

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g{
      {"circle", "x^2 + y^2 - 1", "x^2 + y^2 - 1", 1, 1},
      {"nodal cubic", "y^2 - x^3 - x^2", "y^2 - x^3 - x^2", 1, 1},
      {"cusp", "y^2 - x^3", "y^2 - x^3", 1, 0},
      {"isolated point", "x^2 + y^2", "x^2 + y^2", 1, 0, 1, 0},
      {"lemniscate", "(x^2 + y^2)^2 - (x^2 - y^2)", "(x^2 + y^2)^2 - (x^2 - y^2)", 1, 2},
      {"empty curve", "y^2 + 1", "y^2 + 1", 0, 0, 0, 0},
      {"stacked circles", "(x^2 + y^2 - 1)*(x^2 + (y - 4)^2 - 1)",
       "(x^2 + (y + 2)^2 - 1)*(x^2 + (y - 2)^2 - 1)", 2, 2},
  };
  return g;
}

bool g_ran_goldens = false, g_ran_shear = false, g_ran_determinism = false;
Outcome determinism();

Outcome golden_topologies() {
  g_ran_goldens = true;
  Outcome o;
  std::ostringstream d;
  double worst = 0;
  for (const Golden& g : goldens()) {
    const auto grid = oracle::grid_topology(parse_poly(g.oracle_expr));
    const bool oracle_ok = grid.components == g.components && grid.cycle_rank == g.cycle_rank;
    const auto t0 = Clock::now();
    const TopologyResult r = checked(parse_poly(g.expr));
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const GraphInvariants inv = r.graph.invariants();
    bool ok = oracle_ok && inv.components == grid.components && inv.cycle_rank == grid.cycle_rank &&
              dt < 10;
    if (g.vertices >= 0) ok = ok && inv.vertices == g.vertices;
    if (g.edges >= 0) ok = ok && inv.edges == g.edges;
    if (!ok) {
      o.pass = false;
      d << g.name << " [graph C=" << inv.components << " b1=" << inv.cycle_rank << " V=" << inv.vertices
        << " E=" << inv.edges << "; grid C=" << grid.components << " b1=" << grid.cycle_rank << "] ";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "7 curves, slowest %.3f s", worst);
  o.detail = d.str().empty() ? buf : d.str();
  return o;
}

// Random generic curves for the chain criteria: n cycles through 1..8.
std::vector<SubresChain> chain_suite() {
  oracle::Random rnd(2024);
  std::vector<SubresChain> out;
  for (int t = 0; t < 100; ++t) {
    const BiPoly f = rnd.curve(1 + t % 8, 10);
    out.push_back(subresultant_chain(f, partial_y(f)));
  }
  return out;
}

Outcome specialization(const std::vector<SubresChain>& suite) {
  oracle::Random rnd(77);
  long checks = 0, failures = 0;
  for (const auto& ch : suite) {
    for (int s = 0; s < 20; ++s) {
      const Rational q = rnd.rational(12, 8);
      const IntPoly g = specialize_x(ch.f, q);
      Integer c = 1;
      for (int i = 0; i < ch.f.degree_x(); ++i) c *= q.get_den();
      const UnivChain direct = univariate_chain(g, g.derivative());
      const SpecializedChain sc = specialize_chain(ch, q);
      bool ok = direct.n == sc.n;
      for (int i = 0; ok && i <= ch.n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        Rational scale = 1;
        for (int e = 0; e < specialization_scale_exponent(ch.n, i); ++e) scale *= c;
        ok = RatPoly(direct.sres[k]) == sc.exact[k].scaled(scale) &&
             (i == ch.n || direct.principal[k] == sc.principal[k] * scale);
      }
      ++checks;
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(checks) + " (curve, q) pairs, " + std::to_string(failures) + " failures"};
}

Outcome bezout(const std::vector<SubresChain>& suite) {
  long checks = 0, failures = 0;
  for (const auto& ch : suite) {
    for (int i = 0; i <= ch.n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      ++checks;
      if (!(ch.sres[k] - ch.u[k] * ch.f - ch.v[k] * ch.fy).is_zero()) ++failures;
    }
  }
  return {failures == 0, std::to_string(checks) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome isolation_vs_counting() {
  oracle::Random rnd(4242);
  const auto t0 = Clock::now();
  long failures = 0, non_squarefree = 0;
  for (int t = 0; t < 1000; ++t) {
    IntPoly g;
    if (t % 4 == 3) {
      // g = a * b^2 with deg <= 10
      const int db = static_cast<int>(rnd.uniform(1, 3));
      const int da = static_cast<int>(rnd.uniform(0, 10 - 2 * db));
      const IntPoly b = rnd.poly(db, 4);
      g = rnd.poly(da, 4) * b * b;
    } else {
      g = rnd.poly(static_cast<int>(rnd.uniform(1, 10)), 12);
    }
    if (gcd_int(g, g.derivative()).degree() > 0) ++non_squarefree;
    const auto iv = isolate_real_roots(g);
    const int sh = sturm_habicht_count(g);
    bool ok = sh == static_cast<int>(iv.size()) && sh == oracle::sturm_distinct_real_roots(g);
    const IntPoly s = squarefree_part(g);
    for (const auto& I : iv) {
      if (I.is_point()) {
        ok = ok && s.sign_at(I.lo) == 0;
      } else {
        const int a = s.sign_at(I.lo), b = s.sign_at(I.hi);
        ok = ok && a != 0 && a == -b;
      }
    }
    if (!ok) ++failures;
  }
  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "1000 polynomials (%ld non-square-free), %ld failures, %.2f s", non_squarefree,
                failures, dt);
  return {failures == 0 && dt < 60, buf};
}

Outcome interval_containment() {
  oracle::Random rnd(555);
  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const IntPoly h = rnd.poly(static_cast<int>(rnd.uniform(0, 12)), 10, false);
    const Rational lo = rnd.rational(10, 6);
    Rational w = abs(rnd.rational(8, 10));
    while (w >= 2) w /= 2;
    if (w == 0) w = make_rational(1, 7);
    const Interval I(lo, lo + w);
    const Rational a = I.lo + w * make_rational(rnd.uniform(0, 1 << 20), 1 << 20);
    const Interval J = interval_horner(h, I);
    const Rational m = I.magnitude() > 1 ? I.magnitude() : Rational(1);
    const bool ok = J.contains(h.eval(a)) && J.width() <= 2 * horner_width_bound(h.degree(), h.bitsize(), w, m);
    if (!ok) ++failures;
  }
  return {failures == 0, "1000 triples, " + std::to_string(failures) + " failures"};
}

Outcome algebraic_accuracy() {
  oracle::Random rnd(9090);
  long failures = 0, done = 0;
  const Rational fine = Rational(1) / (Integer(1) << 512);
  while (done < 200) {
    const IntPoly def = rnd.poly(static_cast<int>(rnd.uniform(1, 8)), 10);
    const auto roots = isolate_real_roots(def);
    if (roots.empty()) continue;
    const std::size_t pick = static_cast<std::size_t>(rnd.uniform(0, static_cast<long>(roots.size()) - 1));
    AlgebraicNumber a(def, roots[pick]);
    const IntPoly h = rnd.poly(static_cast<int>(rnd.uniform(0, 10)), 10, false);
    const Rational delta = Rational(1) / (Integer(1) << rnd.uniform(1, 64));
    const Rational r = approx_eval(h, a, delta);
    // oracle: h at a 512-bit refinement; its own error is below width(O)
    const AlgebraicNumber ref = refine(AlgebraicNumber(def, roots[pick]), fine);
    const Interval O = interval_horner(h, ref.enclosure());
    if (!(abs(r - O.lo) < delta && abs(r - O.hi) < delta)) ++failures;
    ++done;
  }
  return {failures == 0, "200 instances, " + std::to_string(failures) + " failures"};
}

Outcome davenport_mahler() {
  oracle::Random rnd(31337);
  long failures = 0;
  for (int t = 0; t < 500; ++t) {
    if (!check_dm_inequality(rnd.poly(static_cast<int>(rnd.uniform(1, 8)), 8))) ++failures;
  }
  return {failures == 0, "500 polynomials, " + std::to_string(failures) + " failures"};
}

struct FullInvariants {
  int components = 0, cycle_rank = 0;
  std::vector<int> degrees;
  std::vector<int> critical_points;
  friend bool operator==(const FullInvariants&, const FullInvariants&) = default;
};

FullInvariants full_invariants(const TopologyGraph& g) {
  FullInvariants f;
  const GraphInvariants inv = g.invariants();
  f.components = inv.components;
  f.cycle_rank = inv.cycle_rank;
  f.degrees = g.degrees();
  std::sort(f.degrees.begin(), f.degrees.end());
  for (const auto& c : g.columns) {
    if (c.kind == ColumnKind::critical) f.critical_points.push_back(c.points);
  }
  std::sort(f.critical_points.begin(), f.critical_points.end());
  return f;
}

std::string describe(const FullInvariants& f) {
  std::ostringstream os;
  os << "C=" << f.components << " b1=" << f.cycle_rank << " deg{";
  for (int d : f.degrees) os << d;
  os << "} crit{";
  for (int p : f.critical_points) os << p;
  os << "}";
  return os.str();
}

// Degree-2 vertices come and go with the number of vertical tangents; the
// remaining degrees (ends, isolated points, singular branch points) do not.
std::vector<int> essential(const std::vector<int>& degrees) {
  std::vector<int> out;
  for (int d : degrees) {
    if (d != 2) out.push_back(d);
  }
  return out;
}

Outcome shear_invariance() {
  g_ran_shear = true;
  oracle::Random rnd(6006);
  int topo_mismatch = 0, literal_mismatch = 0;
  std::ostringstream d;
  TopologyOptions none;
  none.shear_mode = ShearMode::none;
  for (int t = 0; t < 20; ++t) {
    const BiPoly F = rnd.curve(2 + t % 5, 3);
    const TopologyResult a = checked(F);
    const long s1 = a.trace.shear;
    // second valid shear: the next factor in search order that the
    // pipeline accepts
    std::optional<TopologyResult> b;
    long s2 = 0;
    ShearSequence seq(ShearMode::deterministic, F.total_degree(), 0);
    while (auto s = seq.next()) {
      if (*s == s1) continue;
      try {
        b = checked(shear(F, Integer(*s)), none);
        s2 = *s;
        break;
      } catch (const InvalidInput&) {
      }
    }
    if (!b) {
      ++topo_mismatch;
      d << "curve " << t << ": no second shear; ";
      continue;
    }
    const FullInvariants x = full_invariants(a.graph), y = full_invariants(b->graph);
    if (x.components != y.components || x.cycle_rank != y.cycle_rank ||
        essential(x.degrees) != essential(y.degrees)) {
      ++topo_mismatch;
    }
    if (!(x == y)) {
      ++literal_mismatch;
      if (literal_mismatch <= 3) {
        d << "curve " << t << " s=" << s1 << ": " << describe(x) << " vs s=" << s2 << ": " << describe(y) << "; ";
      }
    }
  }
  std::ostringstream s;
  s << "20 curves; components, cycle rank and degrees other than 2 differ on " << topo_mismatch
    << "; full list (degree multiset, critical point counts) differs on " << literal_mismatch;
  if (literal_mismatch > 0) s << " e.g. " << d.str();
  return {literal_mismatch == 0 && topo_mismatch == 0, s.str()};
}

Outcome structural() {
  // Outputs of the other pipeline criteria count too; run them when this
  // criterion is selected on its own.
  if (!g_ran_goldens) golden_topologies();
  if (!g_ran_shear) shear_invariance();
  if (!g_ran_determinism) determinism();
  // More pipeline outputs on random curves, serial and parallel.
  oracle::Random rnd(8128);
  for (int t = 0; t < 10; ++t) {
    const BiPoly F = rnd.curve(2 + t % 4, 4);
    TopologyOptions ser;
    ser.parallel = false;
    checked(F, ser);
    checked(F);
  }
  std::string detail = std::to_string(g_graphs_checked) + " graphs, " + std::to_string(g_violations.size()) +
                       " violations";
  if (!g_violations.empty()) detail += " (first: " + g_violations.front() + ")";
  return {g_violations.empty(), detail};
}

Outcome determinism() {
  g_ran_determinism = true;
  long runs = 0, diffs = 0;
  for (const Golden& g : goldens()) {
    const BiPoly F = parse_poly(g.expr);
    for (ShearMode mode : {ShearMode::deterministic, ShearMode::random}) {
      TopologyOptions opt;
      opt.shear_mode = mode;
      opt.seed = 42;
      const std::string first = emit_json(checked(F, opt));
      for (int run = 1; run < 3; ++run) {
        ++runs;
        if (emit_json(checked(F, opt)) != first) ++diffs;
      }
    }
  }
  return {diffs == 0, std::to_string(runs) + " repeated runs, " + std::to_string(diffs) + " differences"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<SubresChain> suite;
  const std::vector<Criterion> criteria{
      {"golden topologies", golden_topologies},
      {"chain specialization",
       [&] {
         suite = chain_suite();
         return specialization(suite);
       }},
      {"Bezout identity",
       [&] {
         if (suite.empty()) suite = chain_suite();
         return bezout(suite);
       }},
      {"isolation vs Sturm-Habicht", isolation_vs_counting},
      {"interval containment and width bound", interval_containment},
      {"algebraic evaluation accuracy", algebraic_accuracy},
      {"Davenport-Mahler inequality", davenport_mahler},
      {"shear invariance", shear_invariance},
      {"structural invariants", structural},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(i + 1)) == only.end()) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%2zu] %-40s %s  (%s; %.1f s)\n", i + 1, criteria[i].name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
