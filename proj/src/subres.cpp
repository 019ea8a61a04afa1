#include "curvetop/subres.hpp"

#include "curvetop/detail/signed_prs.hpp"
#include "curvetop/errors.hpp"

#include <utility>

namespace curvetop {

namespace {

using detail::YPoly;

BiPoly to_bipoly(YPoly<IntPoly> p) { return BiPoly(std::move(p)); }

int epsilon(int m) {
  // (-1)^(m(m-1)/2)
  return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1;
}

}  // namespace

IntPoly SubresChain::coefficient(int i, int j) const {
  return sres[static_cast<std::size_t>(i)].ycoeff(j);
}

SubresChain subresultant_chain(const BiPoly& f, const BiPoly& fy) {
  if (f.degree_y() < 1) throw PreconditionError("subresultant chain needs deg_y f >= 1");
  if (fy.degree_y() >= f.degree_y()) {
    throw PreconditionError("subresultant chain needs deg_y fy < deg_y f");
  }
  auto prs = detail::signed_subresultants<IntPoly>(f.ycoeffs(), fy.ycoeffs(), true);
  SubresChain chain;
  chain.n = prs.p;
  chain.f = f;
  chain.fy = fy;
  const auto size = static_cast<std::size_t>(prs.p + 1);
  chain.sres.reserve(size);
  chain.u.reserve(size);
  chain.v.reserve(size);
  chain.principal = std::move(prs.principal);
  for (std::size_t i = 0; i < size; ++i) {
    chain.sres.push_back(to_bipoly(std::move(prs.sres[i])));
    chain.u.push_back(to_bipoly(std::move(prs.u[i])));
    chain.v.push_back(to_bipoly(std::move(prs.v[i])));
  }
  chain.resultant = chain.principal[0];
  return chain;
}

UnivChain univariate_chain(const IntPoly& g, const IntPoly& h) {
  if (g.degree() < 1) throw PreconditionError("univariate chain needs deg g >= 1");
  auto prs = detail::signed_subresultants<Integer>(g.coeffs(), h.coeffs(), false);
  UnivChain out;
  out.n = prs.p;
  for (auto& s : prs.sres) out.sres.emplace_back(std::move(s));
  for (auto& c : prs.principal) out.principal.emplace_back(c);
  return out;
}

SpecializedChain specialize_chain(const SubresChain& chain, const Rational& q) {
  SpecializedChain out;
  out.n = chain.n;
  for (int i = 0; i <= chain.n; ++i) {
    const BiPoly& s = chain.sres[static_cast<std::size_t>(i)];
    std::vector<Rational> vals;
    vals.reserve(s.ycoeffs().size());
    for (const auto& c : s.ycoeffs()) vals.push_back(c.eval(q));
    RatPoly exact(std::move(vals));
    out.sres.push_back(exact.clear_denominators());
    out.exact.push_back(std::move(exact));
    out.principal.push_back(chain.principal[static_cast<std::size_t>(i)].eval(q));
  }
  return out;
}

int specialization_scale_exponent(int n, int i) {
  if (i == n || i == n - 1) return 1;
  return 2 * (n - i) - 1;
}

int permanences_minus_variations(const std::vector<int>& signs) {
  if (signs.empty() || signs.front() == 0) {
    throw PreconditionError("sign sequence must start with a nonzero entry");
  }
  int total = 0;
  std::size_t a = 0;
  while (true) {
    std::size_t b = a + 1;
    while (b < signs.size() && signs[b] == 0) ++b;
    if (b >= signs.size()) break;
    const int gap = static_cast<int>(b - a);
    if (gap % 2 == 1) total += epsilon(gap) * signs[a] * signs[b];
    a = b;
  }
  return total;
}

int sturm_habicht_count(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("Sturm-Habicht count of zero");
  if (g.degree() < 1) throw PreconditionError("Sturm-Habicht count needs degree >= 1");
  const UnivChain c = univariate_chain(g, g.derivative());
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(c.n) + 1);
  signs.push_back(sgn(g.lcf()));
  for (int i = c.n - 1; i >= 0; --i) signs.push_back(sgn(c.principal[static_cast<std::size_t>(i)]));
  return permanences_minus_variations(signs);
}

int sturm_habicht_count_at(const SubresChain& chain, const Rational& q) {
  const IntPoly& lead = chain.f.lcf_y();
  if (lead.degree() != 0) {
    throw PreconditionError("chain specialization needs a constant leading coefficient");
  }
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(chain.n) + 1);
  signs.push_back(sgn(lead.lcf()));
  for (int i = chain.n - 1; i >= 0; --i) {
    signs.push_back(chain.principal[static_cast<std::size_t>(i)].sign_at(q));
  }
  return permanences_minus_variations(signs);
}

}  // namespace curvetop
