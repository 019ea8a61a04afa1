#include "curvetop/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace curvetop {

BiPoly::BiPoly(std::vector<IntPoly> ycoeffs) : ycoeffs_(std::move(ycoeffs)) { trim(); }

BiPoly BiPoly::from_univariate_x(const IntPoly& p) { return BiPoly({p}); }

BiPoly BiPoly::from_univariate_y(const IntPoly& p) {
  std::vector<IntPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(IntPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::x() { return BiPoly({IntPoly{0, 1}}); }
BiPoly BiPoly::y() { return BiPoly({IntPoly(), IntPoly{1}}); }
BiPoly BiPoly::constant(const Integer& c) { return BiPoly({IntPoly::constant(c)}); }

void BiPoly::trim() {
  while (!ycoeffs_.empty() && ycoeffs_.back().is_zero()) ycoeffs_.pop_back();
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& p : ycoeffs_) d = std::max(d, p.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < ycoeffs_.size(); ++j) {
    if (!ycoeffs_[j].is_zero()) {
      d = std::max(d, ycoeffs_[j].degree() + static_cast<int>(j));
    }
  }
  return d;
}

std::size_t BiPoly::bitsize() const {
  std::size_t b = 0;
  for (const auto& p : ycoeffs_) b = std::max(b, p.bitsize());
  return b;
}

Integer BiPoly::coeff(int i, int j) const { return ycoeff(j).coeff(i); }

IntPoly BiPoly::ycoeff(int j) const {
  if (j < 0 || j > degree_y()) return {};
  return ycoeffs_[static_cast<std::size_t>(j)];
}

const IntPoly& BiPoly::lcf_y() const {
  static const IntPoly zero;
  return ycoeffs_.empty() ? zero : ycoeffs_.back();
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
  Rational acc = 0;
  for (auto it = ycoeffs_.rbegin(); it != ycoeffs_.rend(); ++it) {
    acc = acc * b + it->eval(a);
  }
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size());
  for (std::size_t j = 0; j < o.ycoeffs_.size(); ++j) ycoeffs_[j] += o.ycoeffs_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size());
  for (std::size_t j = 0; j < o.ycoeffs_.size(); ++j) ycoeffs_[j] -= o.ycoeffs_[j];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> r(a.ycoeffs_.size() + b.ycoeffs_.size() - 1);
  for (std::size_t i = 0; i < a.ycoeffs_.size(); ++i) {
    if (a.ycoeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.ycoeffs_.size(); ++j) {
      r[i + j] += a.ycoeffs_[i] * b.ycoeffs_[j];
    }
  }
  return BiPoly(std::move(r));
}

BiPoly operator*(const Integer& c, const BiPoly& a) {
  std::vector<IntPoly> r(a.ycoeffs_);
  for (auto& p : r) p *= c;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  struct Term {
    int i, j;
    Integer c;
  };
  std::vector<Term> terms;
  for (int j = 0; j <= degree_y(); ++j) {
    const auto& p = ycoeffs_[static_cast<std::size_t>(j)];
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coeffs()[static_cast<std::size_t>(i)] != 0) {
        terms.push_back({i, j, p.coeffs()[static_cast<std::size_t>(i)]});
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.j > b.j;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (first) {
      if (t.c < 0) os << "-";
    } else {
      os << (t.c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(t.c);
    std::string mono;
    auto append = [&mono](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append('x', t.i);
    append('y', t.j);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono;
    }
  }
  return os.str();
}

BiPoly shear(const BiPoly& F, const Integer& s) {
  if (s == 0 || F.is_zero()) return F;
  // (x + s y)^i = sum_k binom(i, k) s^(i-k) x^k y^(i-k)
  const int n = F.total_degree();
  std::vector<IntPoly> out(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<Integer>> out_c(static_cast<std::size_t>(n) + 1,
                                          std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<Integer> spow(static_cast<std::size_t>(n) + 1);
  spow[0] = 1;
  for (int k = 1; k <= n; ++k) spow[static_cast<std::size_t>(k)] = spow[static_cast<std::size_t>(k - 1)] * s;
  Integer binom;
  for (int j = 0; j <= F.degree_y(); ++j) {
    const IntPoly p = F.ycoeff(j);
    for (int i = 0; i <= p.degree(); ++i) {
      const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (int k = 0; k <= i; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i),
                     static_cast<unsigned long>(k));
        out_c[static_cast<std::size_t>(j + i - k)][static_cast<std::size_t>(k)] +=
            c * binom * spow[static_cast<std::size_t>(i - k)];
      }
    }
  }
  for (std::size_t j = 0; j < out_c.size(); ++j) out[j] = IntPoly(std::move(out_c[j]));
  return BiPoly(std::move(out));
}

BiPoly partial_y(const BiPoly& f) {
  if (f.degree_y() < 1) return {};
  std::vector<IntPoly> r;
  for (int j = 1; j <= f.degree_y(); ++j) r.push_back(f.ycoeff(j) * Integer(j));
  return BiPoly(std::move(r));
}

IntPoly specialize_x(const BiPoly& f, const Rational& q) {
  const int N = std::max(f.degree_x(), 0);
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  std::vector<Integer> dpow(static_cast<std::size_t>(N) + 1);
  dpow[0] = 1;
  for (int k = 1; k <= N; ++k) dpow[static_cast<std::size_t>(k)] = dpow[static_cast<std::size_t>(k - 1)] * den;
  std::vector<Integer> out;
  out.reserve(f.ycoeffs().size());
  for (const auto& p : f.ycoeffs()) {
    // sum_i c_i num^i den^(N-i)
    Integer acc = 0;
    Integer npow = 1;
    for (int i = 0; i <= p.degree(); ++i) {
      acc += p.coeffs()[static_cast<std::size_t>(i)] * npow * dpow[static_cast<std::size_t>(N - i)];
      npow *= num;
    }
    out.push_back(std::move(acc));
  }
  return IntPoly(std::move(out));
}

}  // namespace curvetop
