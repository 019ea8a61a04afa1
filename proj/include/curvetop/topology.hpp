#pragma once

#include "curvetop/algnum.hpp"
#include "curvetop/bipoly.hpp"
#include "curvetop/graph.hpp"
#include "curvetop/isolate.hpp"
#include "curvetop/subres.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace curvetop {

enum class GenericityReason {
  degree_drop,               // deg f != deg_y f
  resultant_zero,            // res_y(f, f_y) vanishes identically
  discriminant_zero,         // disc of the square-free part of R vanishes
  multiple_critical_points,  // a real critical fiber has several multiple roots
  runtime_inconsistency,     // a fiber-level safeguard fired
};

std::string to_string(GenericityReason r);

struct GenericityReport {
  bool is_generic = false;
  std::vector<GenericityReason> reasons;
};

/// f together with the data computed while testing its genericity. The
/// critical values are the real roots of R = chain.resultant.
struct PreparedCurve {
  BiPoly f;
  SubresChain chain;
  std::vector<IsolatingInterval> critical_intervals;
  std::vector<int> gcd_degrees;
};

/// Checks (a) deg f = deg_y f, (b) R != 0, (c) disc(R*) != 0, and (d) every
/// real critical fiber has exactly one multiple root, i.e. gcd(f, f_y) at
/// alpha is a perfect k-th power of a linear factor. When `prepared` is
/// given and the checks get far enough, it receives the chain and the
/// critical data.
GenericityReport check_generic(const BiPoly& f, PreparedCurve* prepared = nullptr);

enum class ShearMode { deterministic, random, none };

/// Candidate shear factors in search order. Deterministic: 0, 1, -1, 2, ...
/// (2(n^4+n)+1 of them). Random: draws from {1, ..., 2(n^4+n)}. None: {0}.
class ShearSequence {
 public:
  ShearSequence(ShearMode mode, int total_degree, std::uint64_t seed);
  std::optional<long> next();

 private:
  ShearMode mode_;
  long bound_;
  long emitted_ = 0;
  long limit_;
  std::mt19937_64 rng_;
};

struct ShearResult {
  long s = 0;
  BiPoly f;
};

/// First generic shear in the mode's order. Throws InvalidInput when the
/// input cannot be brought into generic position (not square-free).
ShearResult find_shear(const BiPoly& F, ShearMode mode, std::uint64_t seed = 0);

std::vector<AlgebraicNumber> critical_values(const BiPoly& f, const SubresChain& chain);

/// Least k with sres_k(alpha) != 0.
int gcd_degree_at(AlgebraicNumber& alpha, const SubresChain& chain);

/// Isolates the distinct real roots of f at x = alpha through the cofactor
/// v_{k-1}, whose specialization is the square-free part of the fiber.
/// Precision overflow becomes DegenerateFiber.
BitstreamIsolator lift_critical_fiber(const AlgebraicNumber& alpha, int k,
                                      const SubresChain& chain);

/// 1-based index of the root equal to beta(alpha) = -sres_{k,k-1} / (k sres_{k,k}).
int multiple_root_index(AlgebraicNumber& alpha, int k, const SubresChain& chain,
                        BitstreamIsolator& roots);

/// Number of distinct real roots of f(q, y) for every q, by Sturm-Habicht
/// counting on specialize_x(f, q). Each q must satisfy R(q) != 0.
std::vector<int> arc_counts(const BiPoly& f, const std::vector<Rational>& qs);
/// Same, reading the signs off the precomputed chain.
std::vector<int> arc_counts(const SubresChain& chain, const std::vector<Rational>& qs);

struct CriticalFiber {
  AlgebraicNumber alpha;
  int k = 0;
  std::vector<IsolatingInterval> roots;
  int critical_index = 0;
  unsigned long precision = 0;
  /// Plot ordinates, filled only on request.
  std::vector<Rational> y;
};

TopologyGraph build_graph(const std::vector<CriticalFiber>& fibers,
                          const std::vector<int>& counts, const std::vector<Rational>& qs);

struct FiberTrace {
  std::string alpha;
  int k = 0;
  int points = 0;
  int critical_index = 0;
  unsigned long precision = 0;
};

struct AnalysisTrace {
  long shear = 0;
  std::string sheared;
  std::string resultant;
  std::vector<FiberTrace> fibers;
  std::vector<std::string> intermediate;
  std::vector<int> counts;
  std::vector<std::pair<long, std::string>> rejected;
};

struct TopologyOptions {
  ShearMode shear_mode = ShearMode::deterministic;
  std::uint64_t seed = 0;
  /// Run the per-fiber and per-sample loops with OpenMP when available.
  bool parallel = true;
  /// Compute plot ordinates for every column.
  bool plot_samples = false;
  int max_retries = 16;
};

struct TopologyResult {
  TopologyGraph graph;
  AnalysisTrace trace;
  BiPoly input;
  std::vector<Interval> critical_intervals;
};

TopologyResult compute_topology(const BiPoly& F, const TopologyOptions& options = {});

/// Per-fiber analysis and arc counting on an already generic curve. The
/// serial and parallel variants must agree exactly.
std::vector<CriticalFiber> analyze_fibers(const PreparedCurve& curve, bool parallel,
                                          bool plot_samples = false);
std::vector<int> arc_counts_parallel(const SubresChain& chain, const std::vector<Rational>& qs,
                                     bool parallel);

}  // namespace curvetop
