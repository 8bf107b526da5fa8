#pragma once

// Varshamov-Tenengolts machinery: syndromes, a systematic single-deletion
// code for short payloads, and the classical reinsertion decoder.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "ctxdel/bitseq.hpp"

namespace ctxdel {

// h_VT(w) = sum i*w_i mod (|w|+1), positions 1-indexed.
inline std::uint64_t vt_syndrome(const BitString& w) {
  std::uint64_t s = 0;
  std::uint64_t mod = w.size() + 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i)) s = (s + i + 1) % mod;
  return s;
}

// Same weighted sum under a caller-chosen modulus (the fixed-modulus form
// used by the VT_{a,eps} classes).
inline std::uint64_t vt_syndrome_mod(const BitString& w, std::uint64_t mod) {
  if (mod < 2) throw std::invalid_argument("vt_syndrome_mod: modulus >= 2");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i)) s = (s + i + 1) % mod;
  return s;
}

// All distinct one-bit insertions of r whose syndrome matches `target`
// modulo `mod`; classical VT decoding keeps exactly one when r came from a
// codeword of that syndrome class.
inline std::vector<BitString> vt_matching_insertions(const BitString& r, std::uint64_t target,
                                                     std::uint64_t mod) {
  std::set<BitString> hits;
  for (std::size_t pos = 0; pos <= r.size(); ++pos)
    for (int b = 0; b < 2; ++b) {
      BitString cand = r.inserted(pos, b);
      if (vt_syndrome_mod(cand, mod) == target) hits.insert(cand);
    }
  return std::vector<BitString>(hits.begin(), hits.end());
}

// Recovers the unique word of length |r|+1 with the given syndrome class.
inline BitString vt_reinsert(const BitString& r, std::uint64_t target, std::uint64_t mod) {
  auto hits = vt_matching_insertions(r, target, mod);
  if (hits.size() != 1)
    throw std::invalid_argument("vt_reinsert: syndrome does not identify a unique word");
  return hits.front();
}

// Systematic VT code: message bits sit at the non-power-of-two positions of
// a length-N word and the power-of-two positions are chosen so the total
// syndrome vanishes mod N+1. Corrects one deletion anywhere.
class VtShortCode {
 public:
  explicit VtShortCode(std::size_t payload_bits) : payload_bits_(payload_bits) {
    n_ = payload_bits + 1;
    while (n_ - parity_count(n_) < payload_bits) ++n_;
    for (std::size_t p = 1; p <= n_; p *= 2) parity_positions_.push_back(p);
  }

  std::size_t payload_bits() const { return payload_bits_; }
  std::size_t codeword_length() const { return n_; }
  std::size_t redundancy() const { return n_ - payload_bits_; }

  BitString encode(const BitString& payload) const {
    if (payload.size() != payload_bits_) throw std::invalid_argument("VtShortCode: payload width");
    BitString cw = BitString::zeros(n_);
    std::uint64_t mod = n_ + 1;
    std::uint64_t sum = 0;
    std::size_t next = 0;
    for (std::size_t pos = 1; pos <= n_; ++pos) {
      if (is_power_of_two(pos)) continue;
      int b = payload.at(next++);
      cw.set(pos - 1, b);
      if (b) sum = (sum + pos) % mod;
    }
    std::uint64_t adjust = (mod - sum) % mod;  // <= N, representable on the parity bits
    for (std::size_t j = 0; j < parity_positions_.size(); ++j)
      if ((adjust >> j) & 1) cw.set(parity_positions_[j] - 1, 1);
    return cw;
  }

  // Accepts the intact codeword or any single-deletion corruption of it.
  BitString decode(const BitString& received) const {
    BitString cw;
    if (received.size() == n_) {
      cw = received;
    } else if (received.size() + 1 == n_) {
      cw = vt_reinsert(received, 0, n_ + 1);
    } else {
      throw std::invalid_argument("VtShortCode: unexpected length");
    }
    if (vt_syndrome_mod(cw, n_ + 1) != 0)
      throw std::invalid_argument("VtShortCode: syndrome check failed");
    BitString payload;
    for (std::size_t pos = 1; pos <= n_; ++pos)
      if (!is_power_of_two(pos)) payload.push_back(cw.at(pos - 1));
    return payload;
  }

 private:
  static bool is_power_of_two(std::size_t v) { return (v & (v - 1)) == 0; }
  static std::size_t parity_count(std::size_t n) {
    std::size_t c = 0;
    for (std::size_t p = 1; p <= n; p *= 2) ++c;
    return c;
  }

  std::size_t payload_bits_;
  std::size_t n_ = 0;
  std::vector<std::size_t> parity_positions_;
};

}  // namespace ctxdel
