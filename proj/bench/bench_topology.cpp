// Serial vs OpenMP per-fiber kernels on fixed curves.
//
//   ./bench/bench_topology --benchmark_filter=Fibers

#include "curvetop/isolate.hpp"
#include "curvetop/parse.hpp"
#include "curvetop/topology.hpp"

#include <benchmark/benchmark.h>

#include <random>

#ifdef CURVETOP_HAVE_OPENMP
#include <omp.h>
#endif

using namespace curvetop;

namespace {

// Seeded dense curves of total degree n, plus two structured ones.
BiPoly curve(int id) {
  switch (id) {
    case 0:
      return parse_poly("(x^2 + y^2 - 1)*(x^2 + (y - 4)^2 - 1)");
    case 1:
      return parse_poly("(y^2 - x^3 + x)*(x^2 + 4*y^2 - 9)");
    default:
      break;
  }
  const int n = id + 3;  // 5, 6, 7
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(id));
  std::uniform_int_distribution<int> coef(-15, 15);
  std::vector<IntPoly> ycoeffs;
  for (int j = 0; j <= n; ++j) {
    std::vector<Integer> c(static_cast<std::size_t>(n - j) + 1);
    for (auto& x : c) x = coef(rng);
    if (j == n) c[0] = 1;
    ycoeffs.emplace_back(std::move(c));
  }
  return BiPoly(std::move(ycoeffs));
}

const char* const kNames[] = {"stacked_circles", "cubic_x_ellipse", "dense5", "dense6", "dense7"};

struct Prepared {
  PreparedCurve curve;
  std::vector<Rational> qs;
};

const Prepared& prepared(int id) {
  static std::vector<std::unique_ptr<Prepared>> cache(5);
  auto& p = cache[static_cast<std::size_t>(id)];
  if (!p) {
    p = std::make_unique<Prepared>();
    const ShearResult s = find_shear(curve(id), ShearMode::deterministic);
    check_generic(s.f, &p->curve);
    p->qs = intermediate_points(p->curve.chain.resultant, p->curve.critical_intervals);
  }
  return *p;
}

void Fibers(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  const Prepared& p = prepared(id);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_fibers(p.curve, parallel));
  state.SetLabel(std::string(kNames[id]) + (parallel ? " parallel" : " serial"));
}

void ArcCounts(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  const Prepared& p = prepared(id);
  for (auto _ : state) benchmark::DoNotOptimize(arc_counts_parallel(p.curve.chain, p.qs, parallel));
  state.SetLabel(std::string(kNames[id]) + (parallel ? " parallel" : " serial"));
}

void Pipeline(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  TopologyOptions opt;
  opt.parallel = state.range(1) != 0;
  const BiPoly F = curve(id);
  for (auto _ : state) benchmark::DoNotOptimize(compute_topology(F, opt));
  state.SetLabel(std::string(kNames[id]) + (opt.parallel ? " parallel" : " serial"));
}

}  // namespace

BENCHMARK(Fibers)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(ArcCounts)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(Pipeline)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
#ifdef CURVETOP_HAVE_OPENMP
  benchmark::AddCustomContext("omp_threads", std::to_string(omp_get_max_threads()));
#endif
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
