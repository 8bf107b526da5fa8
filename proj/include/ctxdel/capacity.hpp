#pragma once

// Forbidden-pattern enumeration: correlation polynomials, exact rational
// generating functions from the Guibas-Odlyzko linear system, Taylor-series
// counts, transfer-matrix oracles, and dominant-root capacity bounds.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ctxdel/bitseq.hpp"
#include "ctxdel/dfa.hpp"
#include "ctxdel/intpoly.hpp"
#include "ctxdel/realroots.hpp"

namespace ctxdel {

// Correlation polynomial of A against B: coefficient of z^(i-1) is 1 iff the
// length-i suffix of A equals the length-i prefix of B. The autocorrelation
// of any word therefore carries z^(|A|-1).
inline IntPoly correlation_poly(const BitString& a, const BitString& b) {
  std::vector<BigInt> c(std::min(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 1; i <= c.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < i && match; ++j)
      match = a.at(a.size() - i + j) == b.at(j);
    if (match) c[i - 1] = 1;
  }
  return IntPoly(std::move(c));
}

// Rational function with reduced integer-coefficient parts. Normalization:
// numerator and denominator are coprime, the denominator is primitive with a
// positive leading coefficient.
struct RationalGenFn {
  IntPoly num;
  IntPoly den;

  void reduce() {
    if (num.is_zero()) {
      den = IntPoly(1);
      return;
    }
    IntPoly g = poly_gcd(num, den);
    num = divide_exact(num, g);
    den = divide_exact(den, g);
    // common content out, positive-leading denominator
    BigInt g2 = boost::multiprecision::gcd(num.content(), den.content());
    if (den.lead() < 0) g2 = -g2;
    num = divide_exact(num, IntPoly(g2));
    den = divide_exact(den, IntPoly(g2));
  }
};

namespace detail {

// Dense rational-function arithmetic for the (small) linear solves.
struct RatFn {
  IntPoly n{0};
  IntPoly d{1};

  static RatFn of(IntPoly p) { return {std::move(p), IntPoly(1)}; }
  bool is_zero() const { return n.is_zero(); }

  void reduce() {
    if (n.is_zero()) {
      d = IntPoly(1);
      return;
    }
    IntPoly g = poly_gcd(n, d);
    if (g.degree() > 0 || g.coeff(0) != 1) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
    BigInt c = boost::multiprecision::gcd(n.content(), d.content());
    if (d.lead() < 0) c = -c;
    if (c != 1) {
      n = divide_exact(n, IntPoly(c));
      d = divide_exact(d, IntPoly(c));
    }
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    RatFn r{a.n * b.d + b.n * a.d, a.d * b.d};
    r.reduce();
    return r;
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    RatFn r{a.n * b.d - b.n * a.d, a.d * b.d};
    r.reduce();
    return r;
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    RatFn r{a.n * b.n, a.d * b.d};
    r.reduce();
    return r;
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
    RatFn r{a.n * b.d, a.d * b.n};
    r.reduce();
    return r;
  }
};

// Gaussian elimination over Q(z); returns the solution vector.
inline std::vector<RatFn> solve_linear(std::vector<std::vector<RatFn>> m,
                                       std::vector<RatFn> rhs) {
  std::size_t t = m.size();
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t piv = col;
    while (piv < t && m[piv][col].is_zero()) ++piv;
    if (piv == t) throw std::domain_error("solve_linear: singular system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = 0; row < t; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      RatFn f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < t; ++j) m[row][j] = m[row][j] - f * m[col][j];
      rhs[row] = rhs[row] - f * rhs[col];
    }
  }
  std::vector<RatFn> x(t);
  for (std::size_t i = 0; i < t; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace detail

// Solves the forbidden-pattern system
//   (z - q) F + z (F_A + ... + F_T) = z
//   F - z sum_Y (YX)_z F_Y = 0           for each pattern X
// exactly over Q(z) and returns F(z) reduced. The series convention is
// F(z) = sum_n f(n) z^{-n}; taylor_counts performs the z -> 1/u flip.
inline RationalGenFn solve_forbidden_system(const PatternSet& p, int q_alpha = 2) {
  if (p.patterns.empty()) throw std::invalid_argument("solve_forbidden_system: empty set");
  if (!p.is_reduced()) throw std::invalid_argument("solve_forbidden_system: set not reduced");
  std::size_t t = p.size();
  const IntPoly z = IntPoly::x();

  // Divide the X-equations by F: with g_Y := F_Y / F they read
  //   sum_Y z * (YX)_z * g_Y = 1.
  std::vector<std::vector<detail::RatFn>> m(t, std::vector<detail::RatFn>(t));
  std::vector<detail::RatFn> rhs(t, detail::RatFn::of(IntPoly(1)));
  for (std::size_t x = 0; x < t; ++x)
    for (std::size_t y = 0; y < t; ++y)
      m[x][y] = detail::RatFn::of(z * correlation_poly(p.patterns[y], p.patterns[x]));
  std::vector<detail::RatFn> g = detail::solve_linear(std::move(m), std::move(rhs));

  // (z - q) F + z F sum g = z  =>  F = z / (z - q + z * sum g)
  detail::RatFn sum{IntPoly(0), IntPoly(1)};
  for (const auto& gy : g) sum = sum + gy;
  detail::RatFn denom = detail::RatFn::of(z - IntPoly(q_alpha)) + detail::RatFn::of(z) * sum;
  detail::RatFn f = detail::RatFn::of(z) / denom;
  RationalGenFn out{f.n, f.d};
  out.reduce();
  if (out.den.coeff(0) == 0)
    throw std::logic_error("solve_forbidden_system: denominator vanishes at 0");
  return out;
}

// First n_max counts f(1..n_max) via the linear recurrence induced by the
// reciprocal denominator. Exact big integers.
inline std::vector<BigInt> taylor_counts(const RationalGenFn& f, std::size_t n_max) {
  int dd = f.den.degree();
  int dn = f.num.degree();
  if (dn > dd) throw std::invalid_argument("taylor_counts: improper rational function");
  // reciprocals: nh(u) = u^dd * num(1/u), dh(u) = u^dd * den(1/u)
  std::vector<BigInt> nh(dd + 1, BigInt(0)), dh(dd + 1, BigInt(0));
  for (int i = 0; i <= dn; ++i) nh[dd - i] = f.num.coeff(i);
  for (int i = 0; i <= dd; ++i) dh[dd - i] = f.den.coeff(i);
  if (dh[0] == 0) throw std::logic_error("taylor_counts: reciprocal denominator vanishes at 0");
  std::vector<BigInt> out;
  std::vector<BigInt> series(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    BigInt acc = m < nh.size() ? nh[m] : BigInt(0);
    for (std::size_t j = 1; j <= std::min<std::size_t>(m, dd); ++j)
      acc -= dh[j] * series[m - j];
    if (acc % dh[0] != 0) throw std::logic_error("taylor_counts: non-integer coefficient");
    series[m] = acc / dh[0];
  }
  for (std::size_t m = 1; m <= n_max; ++m) out.push_back(series[m]);
  return out;
}

// Exact |{x in {0,1}^n : x avoids P}| through the pattern-avoider DFA.
// The optional filter is applied by direct enumeration and is meant for
// desk-scale cross-checks only.
template <class Filter>
BigInt transfer_matrix_count_filtered(const PatternSet& p, std::size_t n, Filter keep) {
  Dfa dfa = build_pattern_avoider(p);
  BigInt total = 0;
  // enumerate accepted words via unrank
  CountTable<BigInt> t(dfa, n);
  BigInt count = accepted_count(dfa, t, n);
  for (BigInt c = 0; c < count; ++c) {
    BitString x = unrank(dfa, t, c, n);
    if (keep(x)) ++total;
  }
  return total;
}

inline BigInt transfer_matrix_count(const PatternSet& p, std::size_t n) {
  Dfa dfa = build_pattern_avoider(p);
  CountTable<BigInt> t(dfa, n);
  return accepted_count(dfa, t, n);
}

// ---- pattern families of the extremal-channel analysis ----

namespace patterns {

// 0^k 1 0, 1^k 0 1
inline PatternSet baseline(int k) {
  BitString a = BitString::zeros(k);
  a.push_back(1);
  a.push_back(0);
  PatternSet p;
  p.patterns.push_back(a);
  p.patterns.push_back(a.complement());
  return p;
}

// 0^k, 1^k
inline PatternSet rll(int k) {
  PatternSet p;
  p.patterns.push_back(BitString::zeros(k));
  p.patterns.push_back(BitString::ones(k));
  return p;
}

// E_0 = {0^k100, 0^k1010, ..., 0^k101^{k-2}0, 0^k101^k}; E = E_0 u E_1
inline PatternSet set_E(int k) {
  if (k < 2) throw std::invalid_argument("set_E: k >= 2");
  PatternSet e0;
  for (int j = 0; j <= k - 2; ++j) {
    BitString s = BitString::zeros(k);
    s.push_back(1);
    s.push_back(0);
    s.append(BitString::ones(j));
    s.push_back(0);
    e0.patterns.push_back(s);
  }
  {
    BitString s = BitString::zeros(k);
    s.push_back(1);
    s.push_back(0);
    s.append(BitString::ones(k));
    e0.patterns.push_back(s);
  }
  return e0.united(e0.complemented());
}

// F_0 = {0^{k+1}1^k0^g1 : g in [2,k-1]} u {0^{k+1}1^k0^{k+1}}; F = F_0 u F_1
inline PatternSet set_F(int k) {
  if (k < 2) throw std::invalid_argument("set_F: k >= 2");
  PatternSet f0;
  for (int g = 2; g <= k - 1; ++g) {
    BitString s = BitString::zeros(k + 1);
    s.append(BitString::ones(k));
    s.append(BitString::zeros(g));
    s.push_back(1);
    f0.patterns.push_back(s);
  }
  {
    BitString s = BitString::zeros(k + 1);
    s.append(BitString::ones(k));
    s.append(BitString::zeros(k + 1));
    f0.patterns.push_back(s);
  }
  return f0.united(f0.complemented());
}

// H_n avoids E u {0^{k+1}1^k00, 1^{k+1}0^k11}
inline PatternSet h_set(int k) {
  PatternSet extra;
  BitString s = BitString::zeros(k + 1);
  s.append(BitString::ones(k));
  s.push_back(0);
  s.push_back(0);
  extra.patterns.push_back(s);
  extra.patterns.push_back(s.complement());
  return set_E(k).united(extra);
}

// J_n avoids E u F
inline PatternSet j_set(int k) { return set_E(k).united(set_F(k)); }

}  // namespace patterns

struct CapacityResult {
  int k = 0;
  std::string tag;
  IntPoly denominator;
  RealRoot rho;
  bool simple = false;
  double log2_rho = 0.0;
};

inline CapacityResult analyze_pattern_system(int k, const std::string& tag,
                                             const PatternSet& p, int precision = 30) {
  RationalGenFn f = solve_forbidden_system(p);
  DominantRootResult r = dominant_real_root(f.den, precision);
  CapacityResult out;
  out.k = k;
  out.tag = tag;
  out.denominator = f.den;
  out.rho = r.root;
  out.simple = r.simple;
  out.log2_rho = std::log2(r.root.value());
  return out;
}

struct CapacityBounds {
  CapacityResult rll;
  CapacityResult baseline;
  CapacityResult xi;
  CapacityResult nu;
};

// The four Table-I columns for one threshold. nu is taken as the dominant
// denominator root of the |J_n| generating function; the union over lengths
// in the paper's nu definition contributes only a polynomial factor, which
// leaves the growth rate unchanged.
inline CapacityBounds capacity_bounds(int k, int precision = 30) {
  if (k < 2) throw std::invalid_argument("capacity_bounds: k >= 2");
  CapacityBounds out;
  out.rll = analyze_pattern_system(k, "rll", patterns::rll(k), precision);
  out.baseline = analyze_pattern_system(k, "baseline", patterns::baseline(k), precision);
  out.xi = analyze_pattern_system(k, "xi", patterns::h_set(k), precision);
  out.nu = analyze_pattern_system(k, "nu", patterns::j_set(k), precision);
  return out;
}

// Residue of F at a simple denominator root: num(rho) / den'(rho).
inline BigRat residue_at(const RationalGenFn& f, const BigRat& rho) {
  BigRat dprime = f.den.derivative().eval(rho);
  if (dprime == 0) throw std::domain_error("residue_at: root is not simple");
  return f.num.eval(rho) / dprime;
}

// Relative error of f(n) against the one-pole asymptotic alpha * rho^(n-1).
inline double asymptotic_check(const RationalGenFn& f, std::size_t n, int precision = 30) {
  DominantRootResult r = dominant_real_root(f.den, precision);
  BigRat rho = r.root.mid();
  BigRat alpha = residue_at(f, rho);
  BigRat pow = 1;
  for (std::size_t i = 1; i < n; ++i) pow *= rho;
  BigRat approx = alpha * pow;
  BigInt fn = taylor_counts(f, n).back();
  BigRat rel = (BigRat(fn) - approx) / BigRat(fn);
  if (rel < 0) rel = -rel;
  return rel.convert_to<double>();
}

}  // namespace ctxdel
