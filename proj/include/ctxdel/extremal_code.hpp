#pragma once

// Constructive zero-error code for the extremal channel D_{k,1}:
//  - H'_n membership and the padding map H_{n-k-2} -> H'_n
//  - the left-to-right inverse of D_{k,1} on H'_n
//  - rank/unrank wrappers turning the above into encode/decode
//  - the normal-form rewrite onto J = strings avoiding E u F
//    (channel-output preserving, never longer)

#include <optional>
#include <stdexcept>

#include "ctxdel/capacity.hpp"
#include "ctxdel/channel.hpp"
#include "ctxdel/dfa.hpp"

namespace ctxdel {

// The H'_n condition on top of pattern-avoidance: every run of length >= k
// is followed either by a run of length >= 2 or by the literal continuation
// 101^{k-1}0 (complemented for 1-runs).
inline bool is_in_Hprime(const BitString& x, int k) {
  PatternSet h = patterns::h_set(k);
  if (contains_any(x, h).found) return false;
  auto runs = decompose_runs(x).runs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].len < static_cast<std::size_t>(k)) continue;
    // next run of length >= 2 satisfies constraint (1)
    if (i + 1 < runs.size() && runs[i + 1].len >= 2) continue;
    // otherwise the k+2 bits after the run must read 101^{k-1}0 (for a
    // 0-run; complemented for a 1-run)
    BitString want;
    int b = runs[i].bit;
    want.push_back(1 - b);
    want.push_back(b);
    for (int j = 0; j < k - 1; ++j) want.push_back(1 - b);
    want.push_back(b);
    std::size_t from = runs[i].start - 1 + runs[i].len;  // 0-indexed
    if (from + want.size() > x.size()) return false;
    if (x.substr(from, want.size()) != want) return false;
  }
  return true;
}

// Pads x in H_{n-k-2} with k+2 bits to land in H'_n: a case split on the
// last run of length >= k, then an alternating fill up to length n.
inline BitString pad_to_Hprime(const BitString& x, int k, std::size_t n) {
  if (x.size() + k + 2 > n) throw std::invalid_argument("pad_to_Hprime: need |x| <= n-k-2");
  if (contains_any(x, patterns::h_set(k)).found)
    throw std::invalid_argument("pad_to_Hprime: input not in H");

  BitString out = x;
  auto runs = decompose_runs(x).runs;
  int j = -1;  // last run of length >= k
  for (std::size_t i = 0; i < runs.size(); ++i)
    if (runs[i].len >= static_cast<std::size_t>(k)) j = static_cast<int>(i);

  if (j >= 0) {
    int s = static_cast<int>(runs.size());
    int b = runs[j].bit;  // pads below are written for a 0-run, then flipped
    if (j == s - 1) {
      // pad 101^{k-1}0
      out.push_back(1 - b);
      out.push_back(b);
      for (int i = 0; i < k - 1; ++i) out.push_back(1 - b);
      out.push_back(b);
    } else if (j == s - 2) {
      if (runs[s - 1].len == 1) {
        // ends 0^k 1; pad 01^{k-1}0
        out.push_back(b);
        for (int i = 0; i < k - 1; ++i) out.push_back(1 - b);
        out.push_back(b);
      }
    } else if (j == s - 3) {
      if (runs[s - 2].len == 1) {
        // ends 0^k 1 0 (single middle run forces |r_S| = 1); pad 1^{k-1}0
        for (int i = 0; i < k - 1; ++i) out.push_back(1 - b);
        out.push_back(b);
      }
    } else if (j == s - 4) {
      if (runs[s - 3].len == 1) {
        // ends 0^k 1 0 1^m with m <= k-1; pad 1^{k-1-m}0
        std::size_t m = runs[s - 1].len;
        if (m > static_cast<std::size_t>(k) - 1)
          throw std::logic_error("pad_to_Hprime: H membership violated");
        for (std::size_t i = 0; i < static_cast<std::size_t>(k) - 1 - m; ++i)
          out.push_back(1 - b);
        out.push_back(b);
      }
    }
  }
  // alternating fill to full length
  while (out.size() < n) out.push_back(out.empty() ? 0 : 1 - out.at(out.size() - 1));
  if (out.size() != n) throw std::logic_error("pad_to_Hprime: padding overflowed n");
  return out;
}

// Inverse of D_{k,1} on H'_n: scan left to right, and after every run of
// length >= k in the repaired prefix re-insert the bit the channel deleted.
// Case split per the run length and its successor. Throws when no case
// applies (input not a channel image of an H'_n member).
inline BitString decode_extremal_channel(const BitString& y, int k) {
  BitString s = y;
  std::size_t pos = 0;  // always a run boundary in s
  while (true) {
    // next maximal run starting at or after pos with length >= k
    std::size_t a = pos;
    std::size_t run_start = s.size();
    std::size_t run_end = 0;  // exclusive
    while (a < s.size()) {
      std::size_t b = a;
      while (b < s.size() && s.at(b) == s.at(a)) ++b;
      if (b - a >= static_cast<std::size_t>(k)) {
        run_start = a;
        run_end = b;
        break;
      }
      a = b;
    }
    if (run_start == s.size()) break;
    int v = s.at(run_start);
    int c = 1 - v;
    std::size_t gamma = run_end - run_start;
    if (gamma == static_cast<std::size_t>(k)) {
      s = s.inserted(run_end, c);
      pos = run_end;
      continue;
    }
    // gamma >= k+1: the run cannot be last
    if (run_end == s.size())
      throw std::invalid_argument("decode_extremal_channel: long run at end of output");
    // measure the following run
    std::size_t nb = run_end;
    while (nb < s.size() && s.at(nb) == s.at(run_end)) ++nb;
    std::size_t next_len = nb - run_end;
    if (next_len == static_cast<std::size_t>(k) - 1) {
      // re-insert one bit before the final symbol of the long run
      s = s.inserted(run_end - 1, c);
      pos = run_end;  // the single trailing v after the inserted bit
    } else {
      s = s.inserted(run_end, c);
      pos = run_end;
    }
  }
  return s;
}

// Enumerative encoder over H_{n-k-2} followed by the padding map. Messages
// are 0-based indices below |H_{n-k-2}|.
class ExtremalCode {
 public:
  ExtremalCode(std::size_t n, int k)
      : n_(n), k_(k), dfa_(build_pattern_avoider(patterns::h_set(k))), table_(dfa_, n) {
    if (n < static_cast<std::size_t>(k) + 3) throw std::invalid_argument("ExtremalCode: n >= k+3");
  }

  std::size_t block_length() const { return n_; }
  std::size_t message_length() const { return n_ - k_ - 2; }
  BigInt message_count() const { return table_.at(dfa_.start, message_length()); }

  BitString encode_index(const BigInt& index) const {
    BitString h = unrank(dfa_, table_, index, message_length());
    return pad_to_Hprime(h, k_, n_);
  }

  BigInt decode_to_index(const BitString& y) const {
    BitString xp = decode_extremal_channel(y, k_);
    if (xp.size() != n_) throw std::invalid_argument("ExtremalCode: decoded length mismatch");
    return rank(dfa_, table_, xp.prefix(message_length()));
  }

  // bitstring message interface: fixed width floor(log2(count)) bits
  std::size_t message_bits() const {
    BigInt c = message_count();
    std::size_t bits = 0;
    while ((BigInt(1) << (bits + 1)) <= c) ++bits;
    return bits;
  }
  BitString encode(const BitString& msg) const {
    if (msg.size() != message_bits()) throw std::invalid_argument("ExtremalCode: message width");
    return encode_index(msg.value<BigInt>());
  }
  BitString decode(const BitString& y) const {
    return BitString::from_value(decode_to_index(y), message_bits());
  }

 private:
  std::size_t n_;
  int k_;
  Dfa dfa_;
  CountTable<BigInt> table_;
};

// Lemma-13 normal form: rewrites x into a string avoiding E u F with the
// same channel output and length <= |x|. Three passes iterated to a global
// fixed point:
//  1. 0^k 1 0^k -> 0^{2k}            (drop stray single-bit runs)
//  2. push remaining single-bit runs right:
//     0^k 1 0^g -> 0^{k+g-1} 1 0     when the next 1-run has length k-1
//     0^k 1 0^g -> 0^{k+g} 1         otherwise
//  3. 0^{k+1} 1^k 0^g 1 -> 0^k 1 0 1^{k-1} 0^{g-1} 1   for g in [2, k-1]
//     0^{k+1} 1^k 0^{k+1} -> 0^k 1 0 1^{k-1} 0^k
// (complement rules apply symmetrically)
inline BitString normal_form_J(const BitString& x, int k) {
  auto runs_of = [](const BitString& s) { return decompose_runs(s).runs; };
  const PatternSet forbidden = patterns::j_set(k);
  BitString cur = x;
  const std::size_t uk = static_cast<std::size_t>(k);
  std::size_t guard = 0;
  while (contains_any(cur, forbidden).found) {
    if (++guard > 4 * (x.size() + 2) * (x.size() + 2))
      throw std::logic_error("normal_form_J: rewrite loop failed to terminate");
    bool changed = false;

    // pass 1: single-bit run flanked by two opposite runs of length >= k
    {
      auto runs = runs_of(cur);
      for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
        if (runs[i].len == 1 && runs[i - 1].len >= uk && runs[i + 1].len >= uk) {
          cur = cur.erased(runs[i].start - 1);
          changed = true;
          break;
        }
      }
      if (changed) continue;
    }

    // pass 2: single-bit run after a long run, followed by a short
    // opposite-parity run
    {
      auto runs = runs_of(cur);
      for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
        if (runs[i].len != 1 || runs[i - 1].len < uk) continue;
        std::size_t g = runs[i + 1].len;  // same bit as runs[i-1], g <= k-1 after pass 1
        bool next_is_km1 = i + 2 < runs.size() && runs[i + 2].len == uk - 1;
        if (next_is_km1 && g == 1) continue;  // already the stable 0^a 1 0 1^{k-1} shape
        std::size_t one_pos = runs[i].start - 1;  // 0-indexed single bit
        int one_bit = runs[i].bit;
        BitString next = cur.erased(one_pos);
        if (next_is_km1) {
          // re-insert before the last bit of the merged run: ...0^{k+g-1} 1 0
          next = next.inserted(one_pos + g - 1, one_bit);
        } else {
          // ...0^{k+g} 1 merges into the following 1-run (or ends the word)
          next = next.inserted(one_pos + g, one_bit);
        }
        cur = next;
        changed = true;
        break;
      }
      if (changed) continue;
    }

    // pass 3: the F-pattern rewrites
    {
      auto runs = runs_of(cur);
      for (std::size_t i = 0; i + 2 < runs.size(); ++i) {
        if (runs[i].len < uk + 1 || runs[i + 1].len != uk) continue;
        std::size_t g = runs[i + 2].len;
        int b = runs[i].bit;
        bool tail_case;
        if (g >= 2 && g <= uk - 1 && i + 3 < runs.size())
          tail_case = false;  // 0^{k+1} 1^k 0^g 1...
        else if (g >= uk + 1)
          tail_case = true;  // 0^{k+1} 1^k 0^{k+1}
        else
          continue;
        // replacement applies to the last k+1 bits of runs[i] onwards
        std::size_t from = runs[i].start - 1 + runs[i].len - (uk + 1);
        BitString head = cur.prefix(from);
        BitString repl;
        auto push = [&](int v, std::size_t cnt) {
          for (std::size_t q = 0; q < cnt; ++q) repl.push_back(b == 0 ? v : 1 - v);
        };
        if (!tail_case) {
          // 0^{k+1}1^k0^g 1 -> 0^k 1 0 1^{k-1} 0^{g-1} 1 (trailing 1 kept by suffix)
          push(0, uk);
          push(1, 1);
          push(0, 1);
          push(1, uk - 1);
          push(0, g - 1);
          std::size_t consumed = (uk + 1) + uk + g;
          BitString tail = cur.substr(from + consumed, cur.size() - from - consumed);
          head.append(repl);
          head.append(tail);
        } else {
          // 0^{k+1}1^k0^{k+1} -> 0^k 1 0 1^{k-1} 0^k ; only k+1 of the g
          // zeros are consumed
          push(0, uk);
          push(1, 1);
          push(0, 1);
          push(1, uk - 1);
          push(0, uk);
          std::size_t consumed = (uk + 1) + uk + (uk + 1);
          BitString tail = cur.substr(from + consumed, cur.size() - from - consumed);
          head.append(repl);
          head.append(tail);
        }
        cur = head;
        changed = true;
        break;
      }
    }
    if (!changed)
      throw std::logic_error("normal_form_J: forbidden pattern left with no applicable rule");
  }
  return cur;
}

}  // namespace ctxdel
