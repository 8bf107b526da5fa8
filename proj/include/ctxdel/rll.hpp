#pragma once

// Runlength-limited encoders.
//
// RllCode is an enumerative (rank/unrank) bijection between payload values
// and the lexicographic run-capped words of a fixed length. rll_encode is
// the one-redundant-bit map of the classical result (payload length l,
// output length l+1, runs capped at ceil(log2 l)+3); the run-cap surplus is
// asserted when the table is built. encode_rll_star chains 64 blocks with
// complement buffer bits so the output never carries a run past log2(n).

#include <cstdint>
#include <memory>
#include <stdexcept>

#include "ctxdel/dfa.hpp"
#include "ctxdel/intpoly.hpp"

namespace ctxdel {

inline int ceil_log2(std::uint64_t v) {
  int b = 0;
  while ((std::uint64_t{1} << b) < v) ++b;
  return b;
}

// DFA over {0,1} accepting words with every run of length <= rmax.
inline Dfa build_rll_dfa(std::size_t rmax) {
  if (rmax < 1) throw std::invalid_argument("build_rll_dfa: rmax >= 1");
  // states: 0 = start, 1 = reject, then (bit, runlen 1..rmax)
  Dfa dfa;
  dfa.start = 0;
  dfa.reject = 1;
  auto id = [&](int bit, std::size_t len) -> std::uint32_t {
    return static_cast<std::uint32_t>(2 + bit * rmax + (len - 1));
  };
  std::size_t total = 2 + 2 * rmax;
  dfa.next.assign(total, {1, 1});
  dfa.accepting.assign(total, true);
  dfa.accepting[dfa.reject] = false;
  dfa.next[dfa.start] = {id(0, 1), id(1, 1)};
  for (int b = 0; b < 2; ++b)
    for (std::size_t len = 1; len <= rmax; ++len) {
      std::uint32_t same = (len == rmax) ? dfa.reject : id(b, len + 1);
      dfa.next[id(b, len)][b] = same;
      dfa.next[id(b, len)][1 - b] = id(1 - b, 1);
    }
  dfa.validate();
  return dfa;
}

// Fixed-length enumerative RLL code: payload_bits-bit values mapped onto the
// first 2^payload_bits run-capped words of length out_len.
class RllCode {
 public:
  RllCode(std::size_t payload_bits, std::size_t out_len, std::size_t rmax)
      : payload_bits_(payload_bits),
        out_len_(out_len),
        rmax_(rmax),
        dfa_(build_rll_dfa(rmax)),
        table_(dfa_, out_len) {
    BigInt capacity = table_.at(dfa_.start, out_len_);
    if (capacity < (BigInt(1) << payload_bits_))
      throw std::invalid_argument("RllCode: run cap too tight for the payload");
  }

  std::size_t payload_bits() const { return payload_bits_; }
  std::size_t output_length() const { return out_len_; }
  std::size_t run_cap() const { return rmax_; }

  BitString encode(const BitString& payload) const {
    if (payload.size() != payload_bits_) throw std::invalid_argument("RllCode: payload width");
    return unrank(dfa_, table_, payload.value<BigInt>(), out_len_);
  }

  BitString decode(const BitString& word) const {
    if (word.size() != out_len_) throw std::invalid_argument("RllCode: word length");
    BigInt v = rank(dfa_, table_, word);  // throws when the word exceeds the cap
    if (v >= (BigInt(1) << payload_bits_))
      throw std::invalid_argument("RllCode: word is not an encoder image");
    return BitString::from_value(v, payload_bits_);
  }

 private:
  std::size_t payload_bits_;
  std::size_t out_len_;
  std::size_t rmax_;
  Dfa dfa_;
  CountTable<BigInt> table_;
};

inline std::size_t rll_default_cap(std::size_t l) {
  return static_cast<std::size_t>(ceil_log2(std::max<std::size_t>(l, 1))) + 3;
}

// The one-extra-bit map E: {0,1}^l -> {0,1}^{l+1} with runs <= ceil(log l)+3.
inline BitString rll_encode(const BitString& x) {
  if (x.empty()) throw std::invalid_argument("rll_encode: l >= 1 required");
  RllCode code(x.size(), x.size() + 1, rll_default_cap(x.size()));
  return code.encode(x);
}

inline BitString rll_decode(const BitString& y) {
  if (y.size() < 2) throw std::invalid_argument("rll_decode: too short");
  RllCode code(y.size() - 1, y.size(), rll_default_cap(y.size() - 1));
  return code.decode(y);
}

// Smallest output length whose run-capped word count covers payload_bits.
inline std::size_t min_rll_length(std::size_t payload_bits, std::size_t rmax) {
  Dfa dfa = build_rll_dfa(rmax);
  std::size_t horizon = payload_bits + 8;
  while (true) {
    CountTable<BigInt> t(dfa, horizon);
    BigInt need = BigInt(1) << payload_bits;
    for (std::size_t n = 1; n <= horizon; ++n)
      if (t.at(dfa.start, n) >= need) return n;
    horizon *= 2;
  }
}

// ---- the 64-block chained construction E* ----

struct RllStarLayout {
  std::size_t n = 0;            // codeword length
  std::size_t message_bits = 0; // n - 127
  std::size_t block_len = 0;    // ceil(message_bits / 64)
  std::size_t last_len = 0;     // message_bits - 63*block_len

  static RllStarLayout for_block_length(std::size_t n) {
    if (n < 128 * 64) throw std::invalid_argument("encode_rll_star: n >= 8192 required");
    RllStarLayout lay;
    lay.n = n;
    lay.message_bits = n - 127;
    lay.block_len = (lay.message_bits + 63) / 64;
    lay.last_len = lay.message_bits - 63 * lay.block_len;
    return lay;
  }
};

// E*(x): split into 64 blocks, encode each with E, join with buffer bits
// equal to the complement of the previous block's final bit. 127 redundant
// bits total; max run <= log2 n.
inline BitString encode_rll_star(const BitString& msg, std::size_t n) {
  RllStarLayout lay = RllStarLayout::for_block_length(n);
  if (msg.size() != lay.message_bits)
    throw std::invalid_argument("encode_rll_star: message must have n-127 bits");
  std::size_t cap = rll_default_cap(lay.block_len);
  RllCode block_code(lay.block_len, lay.block_len + 1, cap);
  std::unique_ptr<RllCode> last_code;
  if (lay.last_len > 0 && lay.last_len != lay.block_len)
    last_code = std::make_unique<RllCode>(lay.last_len, lay.last_len + 1,
                                          rll_default_cap(lay.last_len));
  BitString out;
  std::size_t off = 0;
  for (int i = 0; i < 64; ++i) {
    std::size_t len = (i == 63) ? lay.last_len : lay.block_len;
    BitString enc;
    if (len == 0) {
      enc.push_back(0);  // empty final block still contributes its +1 bit
    } else if (i == 63 && last_code) {
      enc = last_code->encode(msg.substr(off, len));
    } else {
      enc = block_code.encode(msg.substr(off, len));
    }
    off += len;
    if (i > 0) out.push_back(1 - out.at(out.size() - 1));  // buffer bit
    out.append(enc);
  }
  if (out.size() != n) throw std::logic_error("encode_rll_star: length bookkeeping");
  return out;
}

inline BitString decode_rll_star(const BitString& cw, std::size_t n) {
  if (cw.size() != n) throw std::invalid_argument("decode_rll_star: length mismatch");
  RllStarLayout lay = RllStarLayout::for_block_length(n);
  std::size_t cap = rll_default_cap(lay.block_len);
  RllCode block_code(lay.block_len, lay.block_len + 1, cap);
  std::unique_ptr<RllCode> last_code;
  if (lay.last_len > 0 && lay.last_len != lay.block_len)
    last_code = std::make_unique<RllCode>(lay.last_len, lay.last_len + 1,
                                          rll_default_cap(lay.last_len));
  BitString msg;
  std::size_t off = 0;
  for (int i = 0; i < 64; ++i) {
    if (i > 0) off += 1;  // skip buffer bit
    std::size_t len = (i == 63) ? lay.last_len : lay.block_len;
    BitString enc = cw.substr(off, len + 1);
    off += len + 1;
    if (len == 0) continue;
    msg.append((i == 63 && last_code) ? last_code->decode(enc) : block_code.decode(enc));
  }
  return msg;
}

}  // namespace ctxdel
