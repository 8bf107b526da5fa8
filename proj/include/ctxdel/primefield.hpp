#pragma once

// Prime-field arithmetic (64-bit moduli) and the Reed-Solomon syndrome /
// recovery layer protecting hash vectors against bounded substitutions.
//
// The code is the [L+4t, L, 4t+1] generalized RS code over F_q whose parity
// rows are the power sums sum_i v_i * i^j, j = 0..4t-1. Knowing the
// syndrome of the original vector and a corrupted copy within 2t
// substitutions pins the original uniquely; recovery runs Berlekamp-Massey
// on the syndrome difference, a Chien scan for the locators, and a small
// Vandermonde solve for the magnitudes.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ctxdel {

namespace field {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % p == 0) return n == p;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t next_prime_above(std::uint64_t v) {
  std::uint64_t c = v + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
  return powmod(a, q - 2, q);  // q prime
}

}  // namespace field

// Sparse vector over [0, q): entries absent from the map hold the sentinel.
struct SparseVector {
  std::uint64_t length = 0;
  std::uint64_t sentinel = 0;
  std::map<std::uint64_t, std::uint64_t> entries;  // 1-indexed position -> value

  std::uint64_t at(std::uint64_t i) const {
    auto it = entries.find(i);
    return it == entries.end() ? sentinel : it->second;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.length != b.length || a.sentinel != b.sentinel) return false;
    return a.entries == b.entries;
  }
};

inline std::size_t hamming_distance(const SparseVector& a, const SparseVector& b) {
  if (a.length != b.length) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      if (ia->second != b.sentinel) ++d;
      ++ia;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      if (ib->second != a.sentinel) ++d;
      ++ib;
    } else {
      if (ia->second != ib->second) ++d;
      ++ia;
      ++ib;
    }
  }
  if (a.sentinel != b.sentinel) throw std::invalid_argument("hamming_distance: sentinel mismatch");
  return d;
}

class RsCode {
 public:
  // q = smallest prime exceeding both the largest symbol value and L+4t.
  RsCode(std::uint64_t length, int t, std::uint64_t max_symbol)
      : l_(length), t_(t) {
    if (t < 1) throw std::invalid_argument("RsCode: t >= 1");
    std::uint64_t floor = std::max<std::uint64_t>(max_symbol, l_ + 4 * t);
    if (floor >= (std::uint64_t{1} << 62)) throw std::invalid_argument("RsCode: field too large");
    q_ = field::next_prime_above(floor);
    // power sums over the full support, for sentinel-dominated vectors:
    // S_j = sum_{i=1..L} i^j mod q
    power_sums_.assign(4 * t_, 0);
    for (std::uint64_t i = 1; i <= l_; ++i) {
      std::uint64_t p = 1 % q_;
      for (int j = 0; j < 4 * t_; ++j) {
        power_sums_[j] = (power_sums_[j] + p) % q_;
        p = field::mulmod(p, i % q_, q_);
      }
    }
  }

  std::uint64_t prime() const { return q_; }
  std::uint64_t length() const { return l_; }
  int t() const { return t_; }
  std::size_t syndrome_symbols() const { return 4 * t_; }

  // syn_j(v) = sum_i v_i i^j, computed sparsely around the sentinel
  std::vector<std::uint64_t> syndrome(const SparseVector& v) const {
    if (v.length != l_) throw std::invalid_argument("RsCode: vector length mismatch");
    if (v.sentinel >= q_) throw std::invalid_argument("RsCode: sentinel exceeds field");
    std::vector<std::uint64_t> syn(4 * t_);
    for (int j = 0; j < 4 * t_; ++j) syn[j] = field::mulmod(v.sentinel, power_sums_[j], q_);
    for (const auto& [i, val] : v.entries) {
      if (i < 1 || i > l_) throw std::invalid_argument("RsCode: position out of range");
      if (val >= q_) throw std::invalid_argument("RsCode: symbol exceeds field");
      std::uint64_t delta = (val + q_ - v.sentinel) % q_;
      std::uint64_t p = 1;
      for (int j = 0; j < 4 * t_; ++j) {
        syn[j] = (syn[j] + field::mulmod(delta, p, q_)) % q_;
        p = field::mulmod(p, i, q_);
      }
    }
    return syn;
  }

  // Recovers the vector with syndrome `target` lying within 2t
  // substitutions of `corrupted`; throws when the decoding radius is
  // exceeded.
  SparseVector recover(const SparseVector& corrupted,
                       const std::vector<std::uint64_t>& target) const {
    if (target.size() != syndrome_symbols())
      throw std::invalid_argument("RsCode: syndrome width mismatch");
    std::vector<std::uint64_t> have = syndrome(corrupted);
    std::vector<std::uint64_t> delta(4 * t_);
    bool all_zero = true;
    for (int j = 0; j < 4 * t_; ++j) {
      delta[j] = (target[j] + q_ - have[j]) % q_;
      all_zero = all_zero && delta[j] == 0;
    }
    if (all_zero) return corrupted;

    // Berlekamp-Massey on delta_j = sum_i e_i i^j
    std::vector<std::uint64_t> locator = berlekamp_massey(delta);
    std::size_t nu = locator.size() - 1;
    if (nu == 0 || nu > static_cast<std::size_t>(2 * t_))
      throw std::invalid_argument("RsCode: decoding radius exceeded");

    // Chien scan: roots of locator(x) at x = i^{-1}
    std::vector<std::uint64_t> positions;
    for (std::uint64_t i = 1; i <= l_ && positions.size() <= nu; ++i) {
      std::uint64_t x = field::invmod(i, q_);
      std::uint64_t acc = 0;
      std::uint64_t p = 1;
      for (std::uint64_t c : locator) {
        acc = (acc + field::mulmod(c, p, q_)) % q_;
        p = field::mulmod(p, x, q_);
      }
      if (acc == 0) positions.push_back(i);
    }
    if (positions.size() != nu)
      throw std::invalid_argument("RsCode: locator roots missing, radius exceeded");

    // magnitudes from the first nu syndrome equations (Vandermonde solve)
    std::vector<std::vector<std::uint64_t>> m(nu, std::vector<std::uint64_t>(nu + 1));
    for (std::size_t j = 0; j < nu; ++j) {
      for (std::size_t c = 0; c < nu; ++c) m[j][c] = field::powmod(positions[c], j, q_);
      m[j][nu] = delta[j];
    }
    std::vector<std::uint64_t> mags = gauss_solve(m);

    SparseVector out = corrupted;
    for (std::size_t c = 0; c < nu; ++c) {
      std::uint64_t fixed = (out.at(positions[c]) + mags[c]) % q_;
      if (fixed == out.sentinel)
        out.entries.erase(positions[c]);
      else
        out.entries[positions[c]] = fixed;
    }
    if (syndrome(out) != target)
      throw std::invalid_argument("RsCode: post-recovery syndrome mismatch");
    return out;
  }

 private:
  // minimal LFSR for the sequence s, returned as locator coefficients
  // [1, c_1, ..., c_nu] with s_j = -sum_l c_l s_{j-l}
  std::vector<std::uint64_t> berlekamp_massey(const std::vector<std::uint64_t>& s) const {
    std::vector<std::uint64_t> c{1}, b{1};
    std::uint64_t bdisc = 1;
    int L = 0, m = 1;
    for (std::size_t nidx = 0; nidx < s.size(); ++nidx) {
      std::uint64_t d = s[nidx];
      for (int i = 1; i <= L; ++i)
        d = (d + field::mulmod(c[i], s[nidx - i], q_)) % q_;
      if (d == 0) {
        ++m;
        continue;
      }
      std::vector<std::uint64_t> tcopy = c;
      std::uint64_t coef = field::mulmod(d, field::invmod(bdisc, q_), q_);
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = field::mulmod(coef, b[i], q_);
        c[i + m] = (c[i + m] + q_ - sub) % q_;
      }
      if (2 * L <= static_cast<int>(nidx)) {
        L = static_cast<int>(nidx) + 1 - L;
        b = tcopy;
        bdisc = d;
        m = 1;
      } else {
        ++m;
      }
    }
    c.resize(L + 1);
    return c;
  }

  std::vector<std::uint64_t> gauss_solve(std::vector<std::vector<std::uint64_t>> m) const {
    std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) throw std::invalid_argument("RsCode: singular magnitude system");
      std::swap(m[piv], m[col]);
      std::uint64_t inv = field::invmod(m[col][col], q_);
      for (std::size_t j = col; j <= n; ++j) m[col][j] = field::mulmod(m[col][j], inv, q_);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        std::uint64_t f = m[r][col];
        for (std::size_t j = col; j <= n; ++j) {
          std::uint64_t sub = field::mulmod(f, m[col][j], q_);
          m[r][j] = (m[r][j] + q_ - sub) % q_;
        }
      }
    }
    std::vector<std::uint64_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
  }

  std::uint64_t l_;
  int t_;
  std::uint64_t q_;
  std::vector<std::uint64_t> power_sums_;
};

}  // namespace ctxdel
