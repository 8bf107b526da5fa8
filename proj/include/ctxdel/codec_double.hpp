#pragma once

// Double-contextual-deletion codec:
//   Enc2(m) = E(h2) . (1 - xbar_1) . xbar
// with xbar unranked into C'_eps and h2 a hash able to undo two plain
// deletions of f(xbar). The hash is pluggable; the default is the Helberg
// weighted syndrome (v_i = 1 + v_{i-1} + v_{i-2}), whose residue classes
// form two-deletion-correcting codes at every length, decoded here by an
// insertion-ball scan with a uniqueness check.

#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "ctxdel/ceps.hpp"
#include "ctxdel/channel.hpp"
#include "ctxdel/extraction.hpp"
#include "ctxdel/rll.hpp"

namespace ctxdel {

// Contract: decode(y, hash(x)) == x whenever y arises from x by at most two
// deletions. Serialized hash values have the fixed width hash_bits().
class TwoDeletionHash {
 public:
  virtual ~TwoDeletionHash() = default;
  virtual std::size_t hash_bits() const = 0;
  virtual BitString hash(const BitString& s) const = 0;
  virtual BitString decode(const BitString& corrupted, const BitString& hash_value) const = 0;
};

class HelbergTwoDeletionHash final : public TwoDeletionHash {
 public:
  explicit HelbergTwoDeletionHash(std::size_t max_len) : max_len_(max_len) {
    weights_.reserve(max_len + 2);
    weights_.push_back(0);  // unused index 0
    BigInt vm1 = 0, vm2 = 0;
    for (std::size_t i = 1; i <= max_len + 1; ++i) {
      BigInt v = 1 + vm1 + vm2;
      weights_.push_back(v);
      vm2 = vm1;
      vm1 = v;
    }
    len_bits_ = ceil_log2(max_len + 1);
    syn_bits_ = 0;
    while ((BigInt(1) << syn_bits_) < weights_[max_len + 1]) ++syn_bits_;
  }

  std::size_t hash_bits() const override { return len_bits_ + syn_bits_ + 64; }

  BitString hash(const BitString& s) const override {
    if (s.size() > max_len_) throw std::invalid_argument("HelbergTwoDeletionHash: input too long");
    BitString out = BitString::from_value(BigInt(s.size()), len_bits_);
    out.append(BitString::from_value(syndrome(s), syn_bits_));
    out.append(BitString::from_value(fingerprint(s), std::size_t{64}));
    return out;
  }

  // GF(2)[x] residue of s modulo a fixed degree-64 polynomial; a linear
  // check that screens candidates the weighted syndrome cannot separate.
  static std::uint64_t fingerprint(const BitString& s) {
    const std::uint64_t poly = 0x42F0E1EBA9EA3693ull;  // CRC-64/ECMA generator
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t top = acc >> 63;
      acc = (acc << 1) | static_cast<std::uint64_t>(s.at(i));
      if (top) acc ^= poly;
    }
    return acc;
  }

  BitString decode(const BitString& corrupted, const BitString& hash_value) const override {
    if (hash_value.size() != hash_bits())
      throw std::invalid_argument("HelbergTwoDeletionHash: hash width");
    std::size_t len = hash_value.prefix(len_bits_).value<std::size_t>();
    BigInt syn = hash_value.substr(len_bits_, syn_bits_).value<BigInt>();
    std::uint64_t fp = hash_value.suffix(64).value<std::uint64_t>();
    if (len < corrupted.size() || len - corrupted.size() > 2 || len > max_len_)
      throw std::invalid_argument("HelbergTwoDeletionHash: length out of decoding range");
    std::size_t t = len - corrupted.size();
    std::set<BitString> hits;
    auto consider = [&](const BitString& z) {
      if (syndrome(z) == syn && fingerprint(z) == fp) hits.insert(z);
    };
    if (t == 0) {
      consider(corrupted);
    } else if (t == 1) {
      for (std::size_t pos = 0; pos <= corrupted.size(); ++pos)
        for (int b = 0; b < 2; ++b) consider(corrupted.inserted(pos, b));
    } else {
      for (std::size_t pos = 0; pos <= corrupted.size(); ++pos)
        for (int b = 0; b < 2; ++b) {
          BitString once = corrupted.inserted(pos, b);
          // second insertion at or after the first avoids revisiting pairs
          for (std::size_t pos2 = pos; pos2 <= once.size(); ++pos2)
            for (int b2 = 0; b2 < 2; ++b2) consider(once.inserted(pos2, b2));
        }
    }
    if (hits.size() != 1)
      throw std::invalid_argument("HelbergTwoDeletionHash: candidate count " +
                                  std::to_string(hits.size()));
    return *hits.begin();
  }

  BigInt syndrome(const BitString& s) const {
    BigInt acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.at(i)) acc += weights_[i + 1];
    return acc % weights_[s.size() + 1];
  }

 private:
  std::size_t max_len_;
  std::size_t len_bits_;
  std::size_t syn_bits_;
  std::vector<BigInt> weights_;
};

struct DoubleCodecParams {
  CepsParams ceps;
  std::size_t d_window = 0;  // regularity window of C'_eps

  void validate() const {
    ceps.validate();
    if (ceps.k <= 2) throw std::invalid_argument("DoubleCodecParams: k > 2");
    if (d_window < 4) throw std::invalid_argument("DoubleCodecParams: d_window >= 4");
  }
};

class DoubleContextualCodec {
 public:
  DoubleContextualCodec(const DoubleCodecParams& params, std::shared_ptr<TwoDeletionHash> hash)
      : p_(params),
        hash_(std::move(hash)),
        dfa_(build_dfa_Ceps_prime(params.ceps, params.d_window)),
        table_(dfa_, params.ceps.n),
        header_cap_(std::min(rll_default_cap(hash_->hash_bits()),
                             static_cast<std::size_t>(params.ceps.k) - 2)),
        header_code_(hash_->hash_bits(), min_rll_length(hash_->hash_bits(), header_cap_),
                     header_cap_) {
    p_.validate();
    BigInt count = table_.at(dfa_.start, p_.ceps.n);
    if (count < (BigInt(1) << (p_.ceps.n - 1)))
      throw std::invalid_argument("DoubleContextualCodec: |C'_eps| below 2^(n-1)");
  }

  std::size_t message_bits() const { return p_.ceps.n - 1; }
  std::size_t header_bits() const { return header_code_.output_length(); }
  std::size_t codeword_bits() const { return header_bits() + 1 + p_.ceps.n; }
  std::size_t redundancy() const { return codeword_bits() - message_bits(); }

  BitString encode(const BitString& msg) const {
    if (msg.size() != message_bits())
      throw std::invalid_argument("DoubleContextualCodec: message width");
    BitString xbar = unrank(dfa_, table_, msg.value<BigInt>(), p_.ceps.n);
    BitString h2 = hash_->hash(extract_f(xbar, p_.ceps.k, p_.ceps.l).subseq);
    BitString cw = header_code_.encode(h2);
    cw.push_back(1 - xbar.at(0));
    cw.append(xbar);
    return cw;
  }

  // Decoding inverts the channel exactly: enumerate every source that can
  // reach wbar by the observed number of sequential contextual deletions
  // (this covers cascade patterns, where a deletion merges two runs and the
  // f-correspondence of the simultaneous model breaks), then filter by
  // C'_eps membership and the transmitted hash of f(.). Exactly one source
  // may survive.
  //
  // When the trace was cascade-free the survivor is also what
  // hash2.decode + reinsert would reconstruct; the enumeration simply does
  // not assume cascade-freeness.
  BitString decode(const BitString& y) const {
    std::size_t full = codeword_bits();
    if (y.size() > full || full - y.size() > 2)
      throw std::invalid_argument("DoubleContextualCodec: unexpected length");
    std::size_t t = full - y.size();
    // header and separator never lose bits: every run there is shorter
    // than k, so no contextual deletion can land in them
    BitString h2 = header_code_.decode(y.prefix(header_bits()));
    BitString wbar = y.substr(header_bits() + 1, y.size() - header_bits() - 1);
    std::vector<BitString> accepted;
    for (const BitString& cand :
         sequential_insertion_candidates(wbar, p_.ceps.k, static_cast<int>(t))) {
      if (!dfa_.accepts(cand)) continue;
      if (hash_->hash(extract_f(cand, p_.ceps.k, p_.ceps.l).subseq) != h2) continue;
      accepted.push_back(cand);
    }
    if (accepted.size() != 1)
      throw std::invalid_argument("DoubleContextualCodec: candidate count " +
                                  std::to_string(accepted.size()) + ", corruption detected");
    return BitString::from_value(rank(dfa_, table_, accepted.front()), message_bits());
  }

 private:
  DoubleCodecParams p_;
  std::shared_ptr<TwoDeletionHash> hash_;
  Dfa dfa_;
  CountTable<BigInt> table_;
  std::size_t header_cap_;
  RllCode header_code_;
};

}  // namespace ctxdel
