#include "curvetop/topology.hpp"

#include "curvetop/errors.hpp"

#include <exception>
#include <memory>
#include <utility>

#ifdef CURVETOP_HAVE_OPENMP
#include <omp.h>
#endif

namespace curvetop {

namespace {

// Squaring schedules stop once the target width passes 2^-(2^20).
constexpr long kMaxWidthExponent = 1L << 20;

IntPoly power(const IntPoly& p, int e) {
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// gcd(f, f_y) at alpha is sres_k(alpha, y), and it is a perfect k-th power
// lc (y - beta)^k iff its coefficients match those of the expansion with
// beta = -S_{k,k-1} / (k S_{k,k}). Cleared of denominators:
//   k^(k-j) S_{k,k}^(k-j-1) S_{k,j} = C(k, j) S_{k,k-1}^(k-j),  j < k-1.
bool single_multiple_root(AlgebraicNumber& alpha, int k, const SubresChain& chain) {
  if (k < 2) return true;
  const IntPoly& s = chain.principal[static_cast<std::size_t>(k)];
  const IntPoly s1 = chain.coefficient(k, k - 1);
  for (int j = 0; j + 2 <= k; ++j) {
    Integer kp = 1;
    for (int i = 0; i < k - j; ++i) kp *= k;
    const IntPoly lhs = kp * (power(s, k - j - 1) * chain.coefficient(k, j));
    const IntPoly rhs = binomial(k, j) * power(s1, k - j);
    if (!vanishes_at(lhs - rhs, alpha)) return false;
  }
  return true;
}

// Encloses beta(alpha) in an interval of width <= eps.
Interval beta_enclosure(AlgebraicNumber& alpha, const IntPoly& num, const IntPoly& den, int k,
                        const Rational& eps) {
  Rational eta(1, 2);
  long exponent = 1;
  while (exponent <= kMaxWidthExponent) {
    alpha.refine(eta);
    const Interval I = alpha.enclosure();
    const Interval Jd = interval_horner(den, I);
    if (!Jd.contains_zero()) {
      const Interval J = -(interval_horner(num, I) / (Rational(k) * Jd));
      if (J.width() <= eps) return J;
    }
    eta *= eta;
    exponent *= 2;
  }
  throw DegenerateFiber("beta enclosure did not converge");
}

// Width target for plot ordinates: at most 1/4 and at most half the
// smallest distance between neighbouring interval midpoints.
Rational plot_width(const std::vector<IsolatingInterval>& roots) {
  Rational w(1, 4);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational gap = midpoint(roots[i + 1].lo, roots[i + 1].hi) - midpoint(roots[i].lo, roots[i].hi);
    if (gap / 2 < w) w = gap / 2;
  }
  return w;
}

std::vector<Rational> midpoints(const std::vector<IsolatingInterval>& roots) {
  std::vector<Rational> y;
  y.reserve(roots.size());
  for (const auto& I : roots) y.push_back(midpoint(I.lo, I.hi));
  return y;
}

std::vector<Rational> plot_ordinates_exact(const BiPoly& f, const Rational& q) {
  const IntPoly g = specialize_x(f, q);
  if (g.degree() < 1) return {};
  auto roots = isolate_real_roots(g);
  roots = refine_to_width(g, roots, Rational(1, 4));
  roots = refine_to_width(g, roots, plot_width(roots));
  return midpoints(roots);
}

CriticalFiber analyze_fiber(const PreparedCurve& curve, std::size_t i, bool plot) {
  const SubresChain& chain = curve.chain;
  AlgebraicNumber alpha(chain.resultant, curve.critical_intervals[i]);
  const int k = curve.gcd_degrees[i];
  BitstreamIsolator roots = lift_critical_fiber(alpha, k, chain);
  const int n = chain.n;
  if (roots.count() == 0 || static_cast<int>(roots.count()) > n - k) {
    throw DegenerateFiber("critical fiber with " + std::to_string(roots.count()) +
                          " real roots for gcd degree " + std::to_string(k));
  }
  const int index = multiple_root_index(alpha, k, chain, roots);
  CriticalFiber fiber{alpha, k, roots.intervals(), index, roots.precision(), {}};
  if (plot) {
    try {
      roots.refine_all(Rational(1, 4));
      roots.refine_all(plot_width(roots.intervals()));
    } catch (const PrecisionOverflow& e) {
      throw DegenerateFiber(e.what());
    }
    fiber.y = midpoints(roots.intervals());
  }
  return fiber;
}

template <typename Fn>
void run_indexed(std::size_t n, bool parallel, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
#ifdef CURVETOP_HAVE_OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace

std::string to_string(GenericityReason r) {
  switch (r) {
    case GenericityReason::degree_drop:
      return "degree_drop";
    case GenericityReason::resultant_zero:
      return "resultant_zero";
    case GenericityReason::discriminant_zero:
      return "discriminant_zero";
    case GenericityReason::multiple_critical_points:
      return "multiple_critical_points";
    case GenericityReason::runtime_inconsistency:
      return "runtime_inconsistency";
  }
  return "unknown";
}

GenericityReport check_generic(const BiPoly& f, PreparedCurve* prepared) {
  GenericityReport report;
  if (f.is_zero() || f.total_degree() < 1 || f.degree_y() != f.total_degree()) {
    report.reasons.push_back(GenericityReason::degree_drop);
    return report;
  }
  SubresChain chain = subresultant_chain(f, partial_y(f));
  const IntPoly& R = chain.resultant;
  if (R.is_zero()) {
    report.reasons.push_back(GenericityReason::resultant_zero);
    return report;
  }
  const IntPoly Rs = R.degree() >= 1 ? squarefree_part(R) : IntPoly::constant(1);
  if (discriminant(Rs) == 0) {
    report.reasons.push_back(GenericityReason::discriminant_zero);
    return report;
  }
  std::vector<IsolatingInterval> intervals;
  std::vector<int> ks;
  if (R.degree() >= 1) {
    intervals = isolate_real_roots(R);
    for (const auto& I : intervals) {
      AlgebraicNumber alpha(R, I);
      const int k = gcd_degree_at(alpha, chain);
      if (!single_multiple_root(alpha, k, chain)) {
        report.reasons.push_back(GenericityReason::multiple_critical_points);
        return report;
      }
      ks.push_back(k);
    }
  }
  report.is_generic = true;
  if (prepared != nullptr) {
    prepared->f = f;
    prepared->chain = std::move(chain);
    prepared->critical_intervals = std::move(intervals);
    prepared->gcd_degrees = std::move(ks);
  }
  return report;
}

ShearSequence::ShearSequence(ShearMode mode, int total_degree, std::uint64_t seed)
    : mode_(mode), rng_(seed) {
  const long n = std::max(total_degree, 1);
  bound_ = 2 * (n * n * n * n + n);
  switch (mode) {
    case ShearMode::deterministic:
      limit_ = bound_ + 1;
      break;
    case ShearMode::random:
      limit_ = 64;
      break;
    case ShearMode::none:
      limit_ = 1;
      break;
  }
}

std::optional<long> ShearSequence::next() {
  if (emitted_ >= limit_) return std::nullopt;
  const long i = emitted_++;
  switch (mode_) {
    case ShearMode::deterministic:
      // 0, 1, -1, 2, -2, ...
      return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    case ShearMode::random: {
      std::uniform_int_distribution<long> dist(1, bound_);
      return dist(rng_);
    }
    case ShearMode::none:
      return 0;
  }
  return std::nullopt;
}

ShearResult find_shear(const BiPoly& F, ShearMode mode, std::uint64_t seed) {
  if (F.is_zero() || F.total_degree() < 1) {
    throw InvalidInput("input must have total degree >= 1");
  }
  ShearSequence seq(mode, F.total_degree(), seed);
  while (auto s = seq.next()) {
    BiPoly f = shear(F, Integer(*s));
    const GenericityReport r = check_generic(f);
    if (r.is_generic) return {*s, std::move(f)};
    if (r.reasons.front() == GenericityReason::resultant_zero) {
      throw InvalidInput("input is not square-free");
    }
  }
  throw InvalidInput("no generic shear found; input not square-free or degenerate");
}

std::vector<AlgebraicNumber> critical_values(const BiPoly& f, const SubresChain& chain) {
  (void)f;
  const IntPoly& R = chain.resultant;
  if (R.is_zero()) throw InvalidInput("resultant vanishes identically; input not square-free");
  std::vector<AlgebraicNumber> out;
  if (R.degree() < 1) return out;
  for (auto& I : isolate_real_roots(R)) out.emplace_back(R, std::move(I));
  return out;
}

int gcd_degree_at(AlgebraicNumber& alpha, const SubresChain& chain) {
  for (int k = 0; k <= chain.n; ++k) {
    const IntPoly& p = chain.principal[static_cast<std::size_t>(k)];
    if (!p.is_zero() && sign_at(p, alpha) != 0) {
      if (k == 0) throw PreconditionError("alpha is not a root of the resultant");
      return k;
    }
  }
  throw DegenerateFiber("all principal subresultant coefficients vanish");
}

BitstreamIsolator lift_critical_fiber(const AlgebraicNumber& alpha, int k,
                                      const SubresChain& chain) {
  if (k < 1 || k >= chain.n + 1) throw PreconditionError("gcd degree out of range");
  const BiPoly& v = chain.v[static_cast<std::size_t>(k - 1)];
  if (v.is_zero()) throw DegenerateFiber("vanishing cofactor for the fiber");
  auto oracle = std::make_shared<AlgebraicCoeffOracle>(v.ycoeffs(), alpha);
  try {
    return BitstreamIsolator(std::move(oracle));
  } catch (const PrecisionOverflow& e) {
    throw DegenerateFiber(std::string("fiber isolation: ") + e.what());
  }
}

int multiple_root_index(AlgebraicNumber& alpha, int k, const SubresChain& chain,
                        BitstreamIsolator& roots) {
  if (roots.count() == 0) throw PreconditionError("critical fiber without real roots");
  if (roots.count() == 1) return 1;
  const IntPoly num = chain.coefficient(k, k - 1);
  const IntPoly& den = chain.principal[static_cast<std::size_t>(k)];
  Rational eps(1, 2);
  for (long exponent = 1; exponent <= kMaxWidthExponent; exponent *= 2, eps *= eps) {
    const Interval J = beta_enclosure(alpha, num, den, k, eps);
    try {
      roots.refine_all(eps);
    } catch (const PrecisionOverflow& e) {
      throw DegenerateFiber(std::string("fiber refinement: ") + e.what());
    }
    int hits = 0;
    int index = 0;
    const auto& I = roots.intervals();
    for (std::size_t i = 0; i < I.size(); ++i) {
      if (J.overlaps(I[i].as_interval())) {
        ++hits;
        index = static_cast<int>(i) + 1;
      }
    }
    if (hits == 0) throw DegenerateFiber("multiple root lies outside every fiber root interval");
    if (hits == 1) return index;
  }
  throw DegenerateFiber("multiple root could not be separated");
}

std::vector<int> arc_counts(const BiPoly& f, const std::vector<Rational>& qs) {
  std::vector<int> out;
  out.reserve(qs.size());
  const int n = f.degree_y();
  for (const auto& q : qs) {
    const IntPoly g = specialize_x(f, q);
    if (g.degree() != n) throw PreconditionError("fiber degree drops at a sample point");
    if (n < 1) {
      out.push_back(0);
      continue;
    }
    const UnivChain c = univariate_chain(g, g.derivative());
    if (c.principal[0] == 0) {
      throw PreconditionError("sample point " + to_fraction_string(q) + " is a critical value");
    }
    out.push_back(sturm_habicht_count(g));
  }
  return out;
}

std::vector<int> arc_counts(const SubresChain& chain, const std::vector<Rational>& qs) {
  return arc_counts_parallel(chain, qs, false);
}

std::vector<int> arc_counts_parallel(const SubresChain& chain, const std::vector<Rational>& qs,
                                     bool parallel) {
  std::vector<int> out(qs.size(), 0);
  run_indexed(qs.size(), parallel, [&](std::size_t i) {
    if (chain.resultant.sign_at(qs[i]) == 0) {
      throw PreconditionError("sample point " + to_fraction_string(qs[i]) +
                              " is a critical value");
    }
    out[i] = sturm_habicht_count_at(chain, qs[i]);
  });
  return out;
}

std::vector<CriticalFiber> analyze_fibers(const PreparedCurve& curve, bool parallel,
                                          bool plot_samples) {
  const std::size_t m = curve.critical_intervals.size();
  std::vector<std::optional<CriticalFiber>> slots(m);
  run_indexed(m, parallel, [&](std::size_t i) { slots[i] = analyze_fiber(curve, i, plot_samples); });
  std::vector<CriticalFiber> out;
  out.reserve(m);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

TopologyGraph build_graph(const std::vector<CriticalFiber>& fibers,
                          const std::vector<int>& counts, const std::vector<Rational>& qs) {
  if (counts.size() != fibers.size() + 1 || qs.size() != counts.size()) {
    throw PreconditionError("build_graph needs m+1 samples and counts for m fibers");
  }
  TopologyGraph g;
  if (fibers.empty()) {
    Column left;
    left.x = -1;
    left.points = counts[0];
    Column right = left;
    right.x = 1;
    g.columns = {left, right};
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      Column c;
      c.x = qs[i];
      c.points = counts[i];
      g.columns.push_back(std::move(c));
      if (i < fibers.size()) {
        const CriticalFiber& fb = fibers[i];
        Column k;
        k.kind = ColumnKind::critical;
        k.x_interval = fb.alpha.enclosure();
        k.x = k.x_interval->mid();
        k.points = static_cast<int>(fb.roots.size());
        k.critical_index = fb.critical_index;
        k.gcd_degree = fb.k;
        k.y = fb.y;
        g.columns.push_back(std::move(k));
      }
    }
  }
  std::vector<std::pair<int, int>> crit;
  crit.reserve(fibers.size());
  for (const auto& fb : fibers) crit.emplace_back(static_cast<int>(fb.roots.size()), fb.critical_index);
  g.edges = connect_columns(counts, crit);
  return g;
}

TopologyResult compute_topology(const BiPoly& F, const TopologyOptions& options) {
  if (F.is_zero() || F.total_degree() < 1) {
    throw InvalidInput("input must have total degree >= 1");
  }
  TopologyResult result;
  result.input = F;
  ShearSequence seq(options.shear_mode, F.total_degree(), options.seed);
  int failures = 0;
  while (auto s = seq.next()) {
    const BiPoly f = shear(F, Integer(*s));
    PreparedCurve prep;
    const GenericityReport report = check_generic(f, &prep);
    if (!report.is_generic) {
      if (report.reasons.front() == GenericityReason::resultant_zero) {
        throw InvalidInput("input is not square-free (resultant vanishes identically)");
      }
      result.trace.rejected.emplace_back(*s, to_string(report.reasons.front()));
      if (options.shear_mode == ShearMode::none) {
        throw InvalidInput("input is not in generic position (" +
                           to_string(report.reasons.front()) + ") and shearing is disabled");
      }
      continue;
    }
    try {
      std::vector<CriticalFiber> fibers = analyze_fibers(prep, options.parallel, options.plot_samples);
      const IntPoly& R = prep.chain.resultant;
      const std::vector<Rational> qs = intermediate_points(R, prep.critical_intervals);
      const std::vector<int> counts = arc_counts_parallel(prep.chain, qs, options.parallel);
      TopologyGraph g = build_graph(fibers, counts, qs);
      g.curve_degree = f.degree_y();
      if (options.plot_samples) {
        std::vector<std::size_t> sample_cols;
        for (std::size_t c = 0; c < g.columns.size(); ++c) {
          if (g.columns[c].kind == ColumnKind::intermediate) sample_cols.push_back(c);
        }
        run_indexed(sample_cols.size(), options.parallel, [&](std::size_t i) {
          Column& c = g.columns[sample_cols[i]];
          c.y = plot_ordinates_exact(f, c.x);
        });
      }

      AnalysisTrace& t = result.trace;
      t.shear = *s;
      t.sheared = f.to_string();
      t.resultant = R.to_string();
      for (const auto& fb : fibers) {
        t.fibers.push_back({fb.alpha.enclosure().to_string(), fb.k,
                            static_cast<int>(fb.roots.size()), fb.critical_index, fb.precision});
        result.critical_intervals.push_back(fb.alpha.enclosure());
      }
      for (const auto& q : qs) t.intermediate.push_back(to_fraction_string(q));
      t.counts = counts;
      result.graph = std::move(g);
      return result;
    } catch (const DegenerateFiber& e) {
      result.trace.rejected.emplace_back(*s, std::string("runtime_inconsistency: ") + e.what());
    } catch (const DelineabilityViolation& e) {
      result.trace.rejected.emplace_back(*s, std::string("runtime_inconsistency: ") + e.what());
    } catch (const PrecisionOverflow& e) {
      result.trace.rejected.emplace_back(*s, std::string("runtime_inconsistency: ") + e.what());
    }
    if (options.shear_mode == ShearMode::none) {
      throw InvalidInput("fiber analysis failed and shearing is disabled: " +
                         result.trace.rejected.back().second);
    }
    if (++failures > options.max_retries) {
      throw InvalidInput("retry budget exhausted; input not square-free?");
    }
  }
  throw InvalidInput("no generic shear found; input not square-free or degenerate");
}

}  // namespace curvetop
