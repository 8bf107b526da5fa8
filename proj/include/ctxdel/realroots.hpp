#pragma once

// Certified real-root isolation for integer polynomials: Sturm chains over
// exact rationals, bisection refinement with sign certification.

#include <optional>
#include <vector>

#include "ctxdel/intpoly.hpp"

namespace ctxdel {

namespace detail {

// Sturm chain of a square-free polynomial. Elements are kept as integer
// polynomials scaled by positive constants only, which preserves signs.
inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    if (b.degree() < 0) break;
    // signed remainder: prem scales a by lead(b)^delta; an odd power of a
    // negative leading coefficient would flip signs, so square the scale
    int delta = a.degree() - b.degree() + 1;
    IntPoly r = pseudo_rem(a, b);
    if (b.lead() < 0 && (delta % 2 == 1)) r = -r;
    if (r.is_zero()) break;
    // divide out the positive content
    BigInt g = r.content();
    std::vector<BigInt> c(r.coeffs());
    for (auto& v : c) v /= g;
    chain.push_back(-IntPoly(std::move(c)));
  }
  return chain;
}

inline int sign_of(const BigRat& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

inline int sign_variations(const std::vector<IntPoly>& chain, const BigRat& x) {
  int vars = 0;
  int prev = 0;
  for (const IntPoly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace detail

// Isolating interval for one real root; lo == hi marks an exact rational
// root. `simple` reports multiplicity one in the original polynomial.
struct RealRoot {
  BigRat lo, hi;
  bool simple = true;

  BigRat mid() const { return (lo + hi) / 2; }
  double value() const { return mid().convert_to<double>(); }
  BigRat width() const { return hi - lo; }

  // Exact decimal expansion of mid(), truncated to `digits` fractional digits.
  std::string decimal(int digits) const {
    BigRat m = mid();
    bool neg = m < 0;
    if (neg) m = -m;
    BigInt num = boost::multiprecision::numerator(m);
    BigInt den = boost::multiprecision::denominator(m);
    BigInt ip = num / den;
    BigInt rem = num % den;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) {
      out += ".";
      for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + (rem / den).convert_to<int>());
        rem %= den;
      }
    }
    return out;
  }
};

class RealRootIsolator {
 public:
  explicit RealRootIsolator(const IntPoly& p) : original_(p) {
    if (p.degree() < 1) throw std::invalid_argument("root isolation: nonconstant polynomial required");
    IntPoly g = poly_gcd(p, p.derivative());
    square_free_ = (g.degree() < 1) ? p.normalized() : divide_exact(p * g.lead(), g).normalized();
    gcd_ = g;
    chain_ = detail::sturm_chain(square_free_);
    // Cauchy bound: all real roots lie strictly inside (-B, B)
    BigInt maxc = 0;
    for (const auto& c : square_free_.coeffs())
      if (abs(c) > maxc) maxc = abs(c);
    bound_ = BigRat(maxc, abs(square_free_.lead())) + 2;
  }

  int count_in(const BigRat& a, const BigRat& b) const {
    return detail::sign_variations(chain_, a) - detail::sign_variations(chain_, b);
  }

  // All real roots, as disjoint isolating intervals in increasing order.
  std::vector<RealRoot> isolate() const {
    std::vector<RealRoot> done;
    std::vector<std::pair<BigRat, BigRat>> work;
    BigRat lo = -bound_, hi = bound_;
    int total = count_in(lo, hi);
    if (total > 0) work.push_back({lo, hi});
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      int cnt = count_in(a, b);
      if (cnt == 0) continue;
      if (cnt == 1) {
        done.push_back(shrink(a, b));
        continue;
      }
      BigRat mid = pick_nonroot_mid(a, b);
      work.push_back({a, mid});
      work.push_back({mid, b});
    }
    std::sort(done.begin(), done.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
    for (RealRoot& r : done) mark_simplicity(r);
    return done;
  }

  // Bisect an isolating interval until its width drops below `eps`.
  RealRoot refine(RealRoot r, const BigRat& eps) const {
    if (r.lo == r.hi) return r;
    while (r.hi - r.lo > eps) {
      BigRat mid = (r.lo + r.hi) / 2;
      BigRat v = square_free_.eval(mid);
      if (v == 0) {
        r.lo = r.hi = mid;
        return r;
      }
      if (detail::sign_of(v) == detail::sign_of(square_free_.eval(r.lo)))
        r.lo = mid;
      else
        r.hi = mid;
    }
    return r;
  }

  const IntPoly& square_free() const { return square_free_; }

 private:
  // Ensures the subdivision point is not itself a root, stepping through a
  // few nearby rationals (a polynomial of degree d has at most d roots).
  BigRat pick_nonroot_mid(const BigRat& a, const BigRat& b) const {
    BigRat span = b - a;
    for (int i = 1; i <= square_free_.degree() + 2; ++i) {
      BigRat mid = a + span * BigRat(i, 2 * i + 1);
      if (square_free_.eval(mid) != 0) return mid;
    }
    throw std::logic_error("pick_nonroot_mid: exhausted candidates");
  }

  // Shrink (a, b] so the interval endpoints are certified non-roots with a
  // sign change across them.
  RealRoot shrink(BigRat a, BigRat b) const {
    // endpoint b could be the root itself
    if (square_free_.eval(b) == 0) return RealRoot{b, b, true};
    // pull `a` to a point with opposite sign; a is a non-root by Sturm use
    while (detail::sign_of(square_free_.eval(a)) == detail::sign_of(square_free_.eval(b))) {
      // the root is interior; bisect towards it
      BigRat mid = pick_nonroot_mid(a, b);
      if (count_in(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    return RealRoot{a, b, true};
  }

  void mark_simplicity(RealRoot& r) const {
    if (gcd_.degree() < 1) {
      r.simple = true;
      return;
    }
    if (r.lo == r.hi) {
      r.simple = gcd_.eval(r.lo) != 0;
      return;
    }
    RealRootIsolator sub(gcd_);
    r.simple = sub.count_in(r.lo, r.hi) == 0;
  }

  IntPoly original_;
  IntPoly square_free_;
  IntPoly gcd_;
  std::vector<IntPoly> chain_;
  BigRat bound_;
};

struct DominantRootResult {
  RealRoot root;
  bool simple;
};

// Largest-magnitude real root, refined to `precision` decimal digits.
// Throws when the polynomial has no real root.
inline DominantRootResult dominant_real_root(const IntPoly& d, int precision = 30) {
  RealRootIsolator iso(d);
  std::vector<RealRoot> roots = iso.isolate();
  if (roots.empty()) throw std::domain_error("dominant_real_root: no real roots");
  BigRat eps = 1;
  for (int i = 0; i < precision; ++i) eps /= 10;

  for (RealRoot& r : roots) r = iso.refine(r, eps);
  // compare |root| via interval magnitude; refine further on near-ties
  auto mag_lo = [](const RealRoot& r) {
    BigRat a = abs(r.lo), b = abs(r.hi);
    if ((r.lo < 0) != (r.hi < 0)) return BigRat(0);
    return a < b ? a : b;
  };
  auto mag_hi = [](const RealRoot& r) {
    BigRat a = abs(r.lo), b = abs(r.hi);
    return a < b ? b : a;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (int round = 0; round < 8 && mag_hi(roots[i]) >= mag_lo(roots[best]) &&
                        mag_hi(roots[best]) >= mag_lo(roots[i]);
         ++round) {
      roots[i] = iso.refine(roots[i], roots[i].width() / 1024);
      roots[best] = iso.refine(roots[best], roots[best].width() / 1024);
      if (roots[i].lo == roots[i].hi && roots[best].lo == roots[best].hi) break;
    }
    if (mag_lo(roots[i]) > mag_hi(roots[best]))
      best = i;
    else if (mag_hi(roots[i]) >= mag_lo(roots[best]) && roots[i].mid() > roots[best].mid())
      best = i;  // magnitude tie (e.g. +-rho): prefer the positive root
  }
  return DominantRootResult{roots[best], roots[best].simple};
}

}  // namespace ctxdel
