#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ctxdel/extremal_code.hpp"
#include "test_helpers.hpp"

using namespace ctxdel;

namespace {

std::vector<BitString> enumerate_avoiders(const PatternSet& p, std::size_t n) {
  std::vector<BitString> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitString x = BitString::from_value(v, n);
    if (!testutil::naive_contains_any(x, p)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("padding lands in H'_n, injectively, without forbidden patterns") {
  for (int k : {2, 3}) {
    PatternSet h = patterns::h_set(k);
    for (std::size_t n = k + 3; n <= 14; ++n) {
      std::set<BitString> images;
      for (const BitString& x : enumerate_avoiders(h, n - k - 2)) {
        BitString padded = pad_to_Hprime(x, k, n);
        REQUIRE(padded.size() == n);
        REQUIRE(padded.prefix(x.size()) == x);
        INFO("k=" << k << " n=" << n << " x=" << x.to_string()
                  << " padded=" << padded.to_string());
        REQUIRE_FALSE(contains_any(padded, h).found);
        REQUIRE(is_in_Hprime(padded, k));
        REQUIRE(images.insert(padded).second);  // distinct inputs, distinct outputs
      }
    }
  }
  CHECK_THROWS(pad_to_Hprime(BitString("0010011"), 2, 12));  // not in H
}

TEST_CASE("padding spec example: trailing long run gets 101^{k-1}0") {
  // x ends in a 0-run of length >= k (the j = S case)
  BitString x("1100111000");
  int k = 3;
  REQUIRE_FALSE(contains_any(x, patterns::h_set(k)).found);
  BitString padded = pad_to_Hprime(x, k, x.size() + k + 2);
  CHECK(padded.to_string() == "1100111000" + std::string("10110"));
}

TEST_CASE("channel is injective on H'_n, exhaustive n <= 14") {
  for (int k : {2, 3})
    for (std::size_t n = 4; n <= 14; ++n) {
      std::map<BitString, BitString> seen;  // output -> input
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BitString x = BitString::from_value(v, n);
        if (!is_in_Hprime(x, k)) continue;
        BitString y = apply_extremal(x, k);
        auto [it, fresh] = seen.try_emplace(y, x);
        INFO("k=" << k << " collision: " << it->second.to_string() << " vs " << x.to_string());
        REQUIRE(fresh);
        // and the decoder inverts the channel
        REQUIRE(decode_extremal_channel(y, k) == x);
      }
    }
}

TEST_CASE("decode with zero long runs is the identity") {
  CHECK(decode_extremal_channel(BitString("0101101"), 3) == BitString("0101101"));
}

TEST_CASE("extremal code roundtrip, exhaustive over all messages") {
  for (int k : {2, 3})
    for (std::size_t n = k + 4; n <= 15; n += 2) {
      ExtremalCode code(n, k);
      BigInt count = code.message_count();
      for (BigInt idx = 0; idx < count; ++idx) {
        BitString cw = code.encode_index(idx);
        REQUIRE(is_in_Hprime(cw, k));
        BitString received = apply_extremal(cw, k);
        REQUIRE(code.decode_to_index(received) == idx);
      }
    }
}

TEST_CASE("extremal code bitstring interface") {
  ExtremalCode code(15, 2);
  std::size_t bits = code.message_bits();
  REQUIRE(bits >= 5);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    BitString msg = BitString::from_value(rng.below(std::uint64_t{1} << bits), bits);
    BitString cw = code.encode(msg);
    REQUIRE(code.decode(apply_extremal(cw, 2)) == msg);
  }
}

TEST_CASE("normal form: fixed point on J members, exhaustive n <= 12") {
  for (int k : {2, 3}) {
    PatternSet j = patterns::j_set(k);
    for (std::size_t n = 1; n <= 12; ++n)
      for (const BitString& x : enumerate_avoiders(j, n)) REQUIRE(normal_form_J(x, k) == x);
  }
}

TEST_CASE("normal form: output preserved, length never grows, lands in J") {
  for (int k : {2, 3}) {
    PatternSet j = patterns::j_set(k);
    for (std::size_t n = 1; n <= 14; ++n) {
      // exhaustive at small n, sampled above
      std::uint64_t step = n <= 11 ? 1 : 57;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += step) {
        BitString x = BitString::from_value(v, n);
        BitString nf = normal_form_J(x, k);
        INFO("k=" << k << " x=" << x.to_string() << " nf=" << nf.to_string());
        REQUIRE(nf.size() <= x.size());
        REQUIRE_FALSE(contains_any(nf, j).found);
        REQUIRE(apply_extremal(nf, k) == apply_extremal(x, k));
      }
    }
  }
}

TEST_CASE("normal form surjectivity: D(union J_i) covers D({0,1}^n), n <= 12") {
  for (int k : {2, 3})
    for (std::size_t n = 8; n <= 12; n += 2) {
      std::set<BitString> full_image;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        full_image.insert(apply_extremal(BitString::from_value(v, n), k));
      std::set<BitString> j_image;
      PatternSet j = patterns::j_set(k);
      for (std::size_t i = 1; i <= n; ++i)
        for (const BitString& x : enumerate_avoiders(j, i))
          j_image.insert(apply_extremal(x, k));
      for (const BitString& y : full_image) REQUIRE(j_image.count(y) == 1);
    }
}
