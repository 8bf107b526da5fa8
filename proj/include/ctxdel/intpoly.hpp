#pragma once

// Exact integer polynomials (dense, ascending degree) and certified real
// root isolation via Sturm chains. Everything is big-integer/big-rational;
// floating point appears only in caller-side conversions.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxdel {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long v) { c_.assign(1, BigInt(v)); trim(); }          // NOLINT
  IntPoly(BigInt v) { c_.assign(1, std::move(v)); trim(); }     // NOLINT
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(BigInt coeff, std::size_t deg) {
    std::vector<BigInt> c(deg + 1);
    c[deg] = std::move(coeff);
    return IntPoly(std::move(c));
  }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& lead() const {
    if (c_.empty()) throw std::logic_error("lead of zero polynomial");
    return c_.back();
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a) { return IntPoly(0) - a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
    std::vector<BigInt> c(a.c_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(i);
    return IntPoly(std::move(c));
  }

  BigRat eval(const BigRat& x) const {
    BigRat v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + BigRat(c_[i]);
    return v;
  }
  BigInt eval_int(const BigInt& x) const {
    BigInt v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g;
  }

  // Primitive part with positive leading coefficient.
  IntPoly normalized() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (lead() < 0) g = -g;
    std::vector<BigInt> c(c_);
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
  }

  // Exact division; throws if the division leaves a remainder.
  friend IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (a.is_zero()) return IntPoly();
    IntPoly rem = a;
    std::vector<BigInt> q(a.c_.size() - b.c_.size() + 1);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      if (rem.lead() % b.lead() != 0) throw std::logic_error("divide_exact: not divisible");
      BigInt f = rem.lead() / b.lead();
      std::size_t shift = rem.degree() - b.degree();
      q[shift] = f;
      rem = rem - IntPoly::monomial(f, shift) * b;
    }
    if (!rem.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(q));
  }

  // Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b.
  friend IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    IntPoly rem = a;
    int target = b.degree();
    while (!rem.is_zero() && rem.degree() >= target) {
      BigInt f = rem.lead();
      std::size_t shift = rem.degree() - target;
      rem = rem * b.lead() - IntPoly::monomial(f, shift) * b;
    }
    return rem;
  }

  // GCD via primitive polynomial remainder sequence, normalized.
  friend IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
    a = a.normalized();
    b = b.normalized();
    while (!b.is_zero()) {
      IntPoly r = pseudo_rem(a, b).normalized();
      a = std::move(b);
      b = std::move(r);
    }
    return a * cont;  // a is primitive with positive lead by construction
  }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt v = c_[i];
      if (first) {
        if (v < 0) os << "-";
        first = false;
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      BigInt av = abs(v);
      if (av != 1 || i == 0) os << av.str();
      if (i >= 1) {
        if (av != 1) os << "*";
        os << var;
        if (i >= 2) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;  // ascending degree
};

}  // namespace ctxdel
