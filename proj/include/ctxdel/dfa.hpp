#pragma once

// DFA engine with exact count tables and rank/unrank enumerative encoding.
//
// Every automaton built here carries a designated absorbing reject state R;
// once a word drives the machine into R it can never be accepted again, so
// the count tables see rejection as prefix-monotone.

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "ctxdel/bitseq.hpp"

namespace ctxdel {

struct Dfa {
  std::uint32_t start = 0;
  std::uint32_t reject = 0;
  std::vector<std::array<std::uint32_t, 2>> next;
  std::vector<bool> accepting;

  std::size_t num_states() const { return next.size(); }

  std::uint32_t step(std::uint32_t q, int b) const { return next[q][b]; }

  std::uint32_t run(const BitString& x) const {
    std::uint32_t q = start;
    for (std::size_t i = 0; i < x.size(); ++i) q = step(q, x.at(i));
    return q;
  }

  bool accepts(const BitString& x) const { return accepting[run(x)]; }

  void validate() const {
    if (next.size() != accepting.size()) throw std::logic_error("Dfa: table size mismatch");
    if (start >= next.size() || reject >= next.size()) throw std::logic_error("Dfa: bad ids");
    if (accepting[reject]) throw std::logic_error("Dfa: reject state must not accept");
    if (next[reject][0] != reject || next[reject][1] != reject)
      throw std::logic_error("Dfa: reject state must absorb");
  }
};

// T(q, i) = number of length-i words accepted when started from q.
// Exact integers; Int is uint64_t / unsigned __int128 / cpp_int depending on
// the horizon the caller needs.
template <class Int>
class CountTable {
 public:
  CountTable(const Dfa& dfa, std::size_t n)
      : states_(dfa.num_states()), horizon_(n), table_((n + 1) * dfa.num_states()) {
    for (std::uint32_t q = 0; q < states_; ++q)
      table_[idx(q, 0)] = dfa.accepting[q] ? Int(1) : Int(0);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::uint32_t q = 0; q < states_; ++q)
        table_[idx(q, i)] =
            table_[idx(dfa.step(q, 0), i - 1)] + table_[idx(dfa.step(q, 1), i - 1)];
  }

  const Int& at(std::uint32_t q, std::size_t i) const { return table_[idx(q, i)]; }
  std::size_t horizon() const { return horizon_; }

 private:
  std::size_t idx(std::uint32_t q, std::size_t i) const { return i * states_ + q; }

  std::size_t states_;
  std::size_t horizon_;
  std::vector<Int> table_;
};

template <class Int>
Int accepted_count(const Dfa& dfa, const CountTable<Int>& t, std::size_t n) {
  return t.at(dfa.start, n);
}

// 0-based lexicographic index of an accepted word among all accepted words
// of the same length ('0' < '1').
template <class Int>
Int rank(const Dfa& dfa, const CountTable<Int>& t, const BitString& x) {
  std::size_t n = x.size();
  if (n > t.horizon()) throw std::invalid_argument("rank: word longer than table horizon");
  if (!dfa.accepts(x)) throw std::invalid_argument("rank: word not accepted");
  Int c = 0;
  std::uint32_t q = dfa.start;
  for (std::size_t i = 1; i <= n; ++i) {
    int b = x.at(i - 1);
    if (b == 1) c += t.at(dfa.step(q, 0), n - i);
    q = dfa.step(q, b);
  }
  return c;
}

// Inverse of rank: the c-th accepted word of length n.
template <class Int>
BitString unrank(const Dfa& dfa, const CountTable<Int>& t, Int c, std::size_t n) {
  if (n > t.horizon()) throw std::invalid_argument("unrank: length beyond table horizon");
  if constexpr (std::numeric_limits<Int>::is_signed) {
    if (c < 0) throw std::invalid_argument("unrank: index out of range");
  }
  if (c >= t.at(dfa.start, n)) throw std::invalid_argument("unrank: index out of range");
  BitString x;
  std::uint32_t q = dfa.start;
  for (std::size_t i = 1; i <= n; ++i) {
    Int zero_count = t.at(dfa.step(q, 0), n - i);
    int b;
    if (c >= zero_count) {
      c -= zero_count;
      b = 1;
    } else {
      b = 0;
    }
    x.push_back(b);
    q = dfa.step(q, b);
  }
  return x;
}

// DFA accepting exactly the words that avoid every pattern of P, built from
// the Aho-Corasick goto function. Terminal nodes collapse into the absorbing
// reject state.
inline Dfa build_pattern_avoider(const PatternSet& p) {
  if (p.patterns.empty()) throw std::invalid_argument("build_pattern_avoider: P nonempty required");
  PatternMatcher m(p);
  Dfa dfa;
  std::size_t nn = m.node_count();
  // node id -> dfa id; terminal nodes all map to the shared reject state
  std::vector<std::uint32_t> id(nn);
  std::uint32_t next_id = 0;
  for (std::size_t q = 0; q < nn; ++q)
    if (!m.terminal(static_cast<std::uint32_t>(q))) id[q] = next_id++;
  std::uint32_t reject = next_id;
  for (std::size_t q = 0; q < nn; ++q)
    if (m.terminal(static_cast<std::uint32_t>(q))) id[q] = reject;
  dfa.next.assign(next_id + 1, {reject, reject});
  dfa.accepting.assign(next_id + 1, false);
  for (std::size_t q = 0; q < nn; ++q) {
    if (m.terminal(static_cast<std::uint32_t>(q))) continue;
    dfa.accepting[id[q]] = true;
    for (int b = 0; b < 2; ++b) dfa.next[id[q]][b] = id[m.step(static_cast<std::uint32_t>(q), b)];
  }
  dfa.start = id[0];
  dfa.reject = reject;
  dfa.validate();
  return dfa;
}

}  // namespace ctxdel
