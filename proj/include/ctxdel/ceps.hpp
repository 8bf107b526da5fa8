#pragma once

// Register DFAs for the structured sets C_eps and C'_eps.
//
// A live state is the tuple (q1..q6):
//   q1  runs of length >= k seen so far (saturates at Rmax+1)
//   q2  current run length
//   q3  previous run length, capped at k
//   q4  longest window ending at the current bit with no 0^l
//   q5  same for 1^l
//   q6  current bit
// plus the empty-word start state and the absorbing reject state. A word is
// accepted iff it satisfies
//   (1) at most Rmax runs of length >= k
//   (2) no run of length >= Lmax
//   (3) no 0^k 1^l or 1^k 0^l substring
//   (4) every length-w window contains both a 0-run and a 1-run of length >= l
// Transitions whose successor registers already violate one of the four
// conditions are routed directly to the reject state, so rejection is
// prefix-monotone and the live state count stays within the
// 2 + (Rmax+1)*Lmax*(k+1)*w^2*2 bound.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ctxdel/dfa.hpp"

namespace ctxdel {

struct CepsParams {
  std::size_t n = 0;
  int k = 0;
  int l = 0;
  std::size_t w = 0;
  std::size_t rmax = 0;  // run-count cap, inclusive
  std::size_t lmax = 0;  // runs of this length or longer are forbidden

  void validate() const {
    if (n == 0) throw std::invalid_argument("CepsParams: n >= 1");
    if (k < 2) throw std::invalid_argument("CepsParams: k >= 2");
    if (l < 2) throw std::invalid_argument("CepsParams: l >= 2 (register construction)");
    if (l >= k) throw std::invalid_argument("CepsParams: l < k");
    if (w < static_cast<std::size_t>(l) || w > n)
      throw std::invalid_argument("CepsParams: l <= w <= n");
    if (lmax < static_cast<std::size_t>(k) + 1)
      throw std::invalid_argument("CepsParams: k < lmax (runs of length k must be legal)");
  }

  // Lemma-style defaults from (n, C, eps); every field remains overridable.
  static CepsParams from_asymptotics(std::size_t n, double C, double eps) {
    CepsParams p;
    p.n = n;
    double logn = std::log2(static_cast<double>(n));
    p.k = static_cast<int>(std::ceil(C * logn));
    p.l = static_cast<int>(std::ceil((1.0 + eps / 2.0) * logn)) - p.k;
    p.w = static_cast<std::size_t>(std::ceil(std::pow(double(n), 1.0 - C + eps)));
    if (p.w > n) p.w = n;
    p.rmax = static_cast<std::size_t>(std::floor(double(n) * logn / std::pow(2.0, p.k)));
    p.lmax = static_cast<std::size_t>(std::ceil(2.0 * logn));
    return p;
  }
};

namespace detail {

// Shared register-DFA builder. Regs must provide key() returning a
// comparable tuple; Advance maps (regs, bit) -> regs; Violates flags tuples
// that already break one of the membership conditions.
template <class Regs, class Advance, class Violates>
Dfa build_register_dfa(const Regs& first0, const Regs& first1, Advance advance,
                       Violates violates) {
  std::vector<Regs> states;
  std::map<decltype(first0.key()), std::uint32_t> ids;
  Dfa dfa;
  // id 0: empty-word start, id 1: absorbing reject
  dfa.start = 0;
  dfa.reject = 1;
  dfa.next.push_back({0, 0});
  dfa.accepting.push_back(false);
  dfa.next.push_back({1, 1});
  dfa.accepting.push_back(false);

  auto intern = [&](const Regs& r) -> std::uint32_t {
    if (violates(r)) return dfa.reject;
    auto [it, fresh] = ids.try_emplace(r.key(), static_cast<std::uint32_t>(dfa.next.size()));
    if (fresh) {
      states.push_back(r);
      dfa.next.push_back({0, 0});
      dfa.accepting.push_back(true);
    }
    return it->second;
  };

  std::vector<std::uint32_t> frontier;
  const Regs* firsts[2] = {&first0, &first1};
  for (std::uint32_t b = 0; b < 2; ++b) {
    std::size_t before = dfa.next.size();
    std::uint32_t id = intern(*firsts[b]);
    dfa.next[dfa.start][b] = id;
    if (id != dfa.reject && dfa.next.size() > before) frontier.push_back(id);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    std::uint32_t q = frontier[head];
    Regs r = states[q - 2];
    for (std::uint32_t b = 0; b < 2; ++b) {
      std::size_t before = dfa.next.size();
      std::uint32_t id = intern(advance(r, b));
      dfa.next[q][b] = id;
      if (id != dfa.reject && dfa.next.size() > before) frontier.push_back(id);
    }
  }
  dfa.validate();
  return dfa;
}

struct CepsRegs {
  std::uint32_t q1, q2, q3, q4, q5, q6;
  std::array<std::uint32_t, 6> key() const { return {q1, q2, q3, q4, q5, q6}; }
};

struct CepsPrimeRegs {
  CepsRegs base;
  std::uint32_t q7, q8;  // longest windows with no 00 / no 11
  std::array<std::uint32_t, 8> key() const {
    return {base.q1, base.q2, base.q3, base.q4, base.q5, base.q6, q7, q8};
  }
};

inline CepsRegs ceps_advance(const CepsRegs& r, std::uint32_t b, std::uint32_t k,
                             std::uint32_t l, std::uint32_t rmax) {
  CepsRegs s;
  if (r.q6 == b) {  // run continues
    s.q1 = r.q1 + (r.q2 == k - 1 ? 1 : 0);
    if (s.q1 > rmax + 1) s.q1 = rmax + 1;
    s.q2 = r.q2 + 1;
    s.q3 = r.q3;
  } else {  // new run starts
    s.q1 = r.q1;
    s.q2 = 1;
    s.q3 = std::min(r.q2, k);
  }
  // q4 resets to l-1 the moment a 0-run reaches length l, q5 likewise for 1s
  bool zero_run_hits_l = (b == 0) && (r.q6 == 0) && (r.q2 >= l - 1);
  bool one_run_hits_l = (b == 1) && (r.q6 == 1) && (r.q2 >= l - 1);
  s.q4 = zero_run_hits_l ? (l - 1) : r.q4 + 1;
  s.q5 = one_run_hits_l ? (l - 1) : r.q5 + 1;
  s.q6 = b;
  return s;
}

}  // namespace detail

// The Lemma 4 automaton. Words of any length may be fed; the count table at
// horizon n enumerates the length-n members.
inline Dfa build_dfa_Ceps(const CepsParams& p) {
  p.validate();
  const std::uint32_t k = static_cast<std::uint32_t>(p.k);
  const std::uint32_t l = static_cast<std::uint32_t>(p.l);
  const std::uint32_t w = static_cast<std::uint32_t>(p.w);
  const std::uint32_t rmax = static_cast<std::uint32_t>(p.rmax);
  const std::uint32_t lmax = static_cast<std::uint32_t>(p.lmax);

  auto violates = [=](const detail::CepsRegs& r) {
    if (r.q1 > rmax) return true;             // run-count cap exceeded
    if (r.q2 >= lmax) return true;            // over-long run
    if (r.q2 == l && r.q3 == k) return true;  // 0^k 1^l / 1^k 0^l completed
    if (r.q4 >= w || r.q5 >= w) return true;  // length-w window missing a run
    return false;
  };
  auto advance = [=](const detail::CepsRegs& r, std::uint32_t b) {
    return detail::ceps_advance(r, b, k, l, rmax);
  };
  Dfa dfa = detail::build_register_dfa(detail::CepsRegs{0, 1, 0, 1, 1, 0},
                                       detail::CepsRegs{0, 1, 0, 1, 1, 1}, advance, violates);
  // Appendix-B-shaped polynomial bound on the live state count.
  std::size_t bound =
      2 + (p.rmax + 1) * p.lmax * (static_cast<std::size_t>(p.k) + 1) * p.w * p.w * 2;
  if (dfa.num_states() > bound) throw std::logic_error("build_dfa_Ceps: state bound exceeded");
  return dfa;
}

// C'_eps: C_eps intersected with the regularity constraint that every
// length-d_window window contains both a 00 and a 11.
//
// When l == 2 the C_eps window registers already measure the distance since
// the last 00/11, so the intersection equals C_eps with the window cap
// tightened to min(w, d_window); otherwise two extra registers q7, q8 track
// the last occurrences of 00 and 11.
inline Dfa build_dfa_Ceps_prime(const CepsParams& p, std::size_t d_window) {
  if (d_window < 4) throw std::invalid_argument("build_dfa_Ceps_prime: d_window >= 4");
  if (p.l == 2) {
    CepsParams q = p;
    q.w = std::min(p.w, d_window);
    return build_dfa_Ceps(q);
  }
  p.validate();
  const std::uint32_t k = static_cast<std::uint32_t>(p.k);
  const std::uint32_t l = static_cast<std::uint32_t>(p.l);
  const std::uint32_t w = static_cast<std::uint32_t>(p.w);
  const std::uint32_t rmax = static_cast<std::uint32_t>(p.rmax);
  const std::uint32_t lmax = static_cast<std::uint32_t>(p.lmax);
  const std::uint32_t dw = static_cast<std::uint32_t>(d_window);

  auto violates = [=](const detail::CepsPrimeRegs& r) {
    if (r.base.q1 > rmax) return true;
    if (r.base.q2 >= lmax) return true;
    if (r.base.q2 == l && r.base.q3 == k) return true;
    if (r.base.q4 >= w || r.base.q5 >= w) return true;
    if (r.q7 >= dw || r.q8 >= dw) return true;
    return false;
  };
  auto advance = [=](const detail::CepsPrimeRegs& r, std::uint32_t b) {
    detail::CepsPrimeRegs s;
    s.base = detail::ceps_advance(r.base, b, k, l, rmax);
    s.q7 = (b == 0 && r.base.q6 == 0) ? 1 : r.q7 + 1;
    s.q8 = (b == 1 && r.base.q6 == 1) ? 1 : r.q8 + 1;
    return s;
  };
  return detail::build_register_dfa(detail::CepsPrimeRegs{{0, 1, 0, 1, 1, 0}, 1, 1},
                                    detail::CepsPrimeRegs{{0, 1, 0, 1, 1, 1}, 1, 1}, advance,
                                    violates);
}

}  // namespace ctxdel
