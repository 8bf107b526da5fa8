#include <catch2/catch_amalgamated.hpp>

#include "ctxdel/rng.hpp"
#include "ctxdel/vt.hpp"
#include "test_helpers.hpp"

using namespace ctxdel;

TEST_CASE("vt syndrome spot values") {
  CHECK(vt_syndrome(BitString("101")) == 0);  // (1+3) mod 4
  CHECK(vt_syndrome(BitString::zeros(9)) == 0);
  CHECK(vt_syndrome(BitString("1")) == 1 % 2);
  CHECK(vt_syndrome_mod(BitString("101"), 17) == 4);
}

TEST_CASE("classical single-deletion recovery from the syndrome, exhaustive") {
  for (std::size_t m = 1; m <= 12; ++m) {
    std::uint64_t mod = m + 1;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
      BitString w = BitString::from_value(v, m);
      std::uint64_t a = vt_syndrome(w);
      for (std::size_t del = 0; del < m; ++del) {
        BitString r = w.erased(del);
        REQUIRE(vt_reinsert(r, a, mod) == w);
      }
    }
  }
}

TEST_CASE("systematic short code: roundtrip under every single deletion") {
  for (std::size_t payload_bits : {4u, 9u, 13u}) {
    VtShortCode code(payload_bits);
    CHECK(code.codeword_length() - code.redundancy() == payload_bits);
    SplitMix64 rng(payload_bits);
    for (int trial = 0; trial < 200; ++trial) {
      BitString payload =
          BitString::from_value(rng.below(std::uint64_t{1} << payload_bits), payload_bits);
      BitString cw = code.encode(payload);
      REQUIRE(code.decode(cw) == payload);
      for (std::size_t del = 0; del < cw.size(); ++del)
        REQUIRE(code.decode(cw.erased(del)) == payload);
    }
  }
}

TEST_CASE("short code flags nonsense lengths") {
  VtShortCode code(8);
  CHECK_THROWS(code.decode(BitString::zeros(code.codeword_length() - 2)));
}
