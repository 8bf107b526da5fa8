#pragma once

// Efficient single-contextual-deletion codec:
//   Enc(m) = xbar . b b (1-b) . Enc_short(h)
// with xbar the unranked C_eps word, b the complement of its last bit, and
// h the fixed-modulus VT syndrome of f(xbar). Decoding locates the xbar
// prefix via the run holding position n+1, then scans the <= n reinsertion
// candidates and insists exactly one passes membership + syndrome.

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ctxdel/ceps.hpp"
#include "ctxdel/channel.hpp"
#include "ctxdel/extraction.hpp"
#include "ctxdel/rll.hpp"
#include "ctxdel/vt.hpp"

namespace ctxdel {

struct SingleCodecParams {
  CepsParams ceps;

  std::uint64_t vt_modulus() const {
    return static_cast<std::uint64_t>(ceps.rmax) * (ceps.lmax + ceps.w) + 1;
  }
  std::size_t h_bits() const { return static_cast<std::size_t>(ceil_log2(vt_modulus())); }

  void validate() const {
    ceps.validate();
    if (ceps.k <= 2) throw std::invalid_argument("SingleCodecParams: k > 2 (decode case split)");
    if (vt_modulus() < 2) throw std::invalid_argument("SingleCodecParams: degenerate modulus");
  }
};

class SingleContextualCodec {
 public:
  explicit SingleContextualCodec(const SingleCodecParams& params)
      : p_(params), dfa_(build_dfa_Ceps(params.ceps)), table_(dfa_, params.ceps.n),
        short_code_(params.h_bits()) {
    p_.validate();
    BigInt count = table_.at(dfa_.start, p_.ceps.n);
    if (count < (BigInt(1) << (p_.ceps.n - 1)))
      throw std::invalid_argument("SingleContextualCodec: |C_eps| below 2^(n-1); params infeasible");
  }

  std::size_t message_bits() const { return p_.ceps.n - 1; }
  std::size_t codeword_bits() const { return p_.ceps.n + 3 + short_code_.codeword_length(); }
  std::size_t redundancy() const { return codeword_bits() - message_bits(); }
  const SingleCodecParams& params() const { return p_; }

  BitString encode(const BitString& msg) const {
    if (msg.size() != message_bits())
      throw std::invalid_argument("SingleContextualCodec: message width");
    BitString xbar = unrank(dfa_, table_, msg.value<BigInt>(), p_.ceps.n);
    std::uint64_t h = vt_syndrome_mod(extract_f(xbar, p_.ceps.k, p_.ceps.l).subseq, p_.vt_modulus());
    int b = 1 - xbar.at(xbar.size() - 1);
    BitString cw = xbar;
    cw.push_back(b);
    cw.push_back(b);
    cw.push_back(1 - b);
    cw.append(short_code_.encode(BitString::from_value(h, p_.h_bits())));
    return cw;
  }

  BitString decode(const BitString& y) const {
    const std::size_t n = p_.ceps.n;
    const std::size_t full = codeword_bits();
    if (y.size() == full) {
      BitString xbar = y.prefix(n);
      if (!dfa_.accepts(xbar))
        throw std::invalid_argument("SingleContextualCodec: prefix not in C_eps");
      return to_message(xbar);
    }
    if (y.size() + 1 != full)
      throw std::invalid_argument("SingleContextualCodec: unexpected length");

    // tail: the last n'-1 bits are within one deletion of Enc_short(h)
    std::size_t ns = short_code_.codeword_length();
    std::uint64_t h =
        short_code_.decode(y.suffix(ns - 1)).value<std::uint64_t>();

    // locate the run containing position n+1 (0-indexed n)
    std::size_t a = n, b = n;
    while (a > 0 && y.at(a - 1) == y.at(n)) --a;
    while (b + 1 < y.size() && y.at(b + 1) == y.at(n)) ++b;
    std::size_t run_len = b - a + 1;
    BitString p = run_len <= 2 ? y.prefix(a) : y.prefix(b - 1);

    std::vector<BitString> accepted;
    if (p.size() == n) {
      if (dfa_.accepts(p)) accepted.push_back(p);
    } else if (p.size() + 1 == n) {
      for (std::size_t j = 1; j <= p.size(); ++j) {
        int bit = 1 - p.at(j - 1);
        BitString cand = p.inserted(j, bit);
        if (!insertion_is_contextual(cand, j)) continue;
        if (!dfa_.accepts(cand)) continue;
        if (vt_syndrome_mod(extract_f(cand, p_.ceps.k, p_.ceps.l).subseq, p_.vt_modulus()) != h)
          continue;
        accepted.push_back(cand);
      }
    } else {
      throw std::invalid_argument("SingleContextualCodec: malformed prefix");
    }
    if (accepted.size() != 1)
      throw std::invalid_argument("SingleContextualCodec: candidate count " +
                                  std::to_string(accepted.size()) + ", corruption detected");
    return to_message(accepted.front());
  }

 private:
  BitString to_message(const BitString& xbar) const {
    return BitString::from_value(rank(dfa_, table_, xbar), message_bits());
  }

  // the inserted bit at 0-index j must start a run whose predecessor run has
  // length >= k
  bool insertion_is_contextual(const BitString& cand, std::size_t j) const {
    std::size_t len = 0;
    std::size_t i = j;
    while (i > 0 && cand.at(i - 1) == cand.at(j - 1)) {
      ++len;
      --i;
    }
    return len >= static_cast<std::size_t>(p_.ceps.k);
  }

  SingleCodecParams p_;
  Dfa dfa_;
  CountTable<BigInt> table_;
  VtShortCode short_code_;
};

}  // namespace ctxdel
