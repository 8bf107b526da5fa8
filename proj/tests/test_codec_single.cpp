#include <catch2/catch_amalgamated.hpp>

#include "ctxdel/channel.hpp"
#include "ctxdel/codec_single.hpp"
#include "ctxdel/rng.hpp"
#include "test_helpers.hpp"

using namespace ctxdel;

namespace {

// Documented desk parameterization for the single codec (also used by the
// acceptance suite): n = 96, k = 7, l = 2, w = 48.
SingleCodecParams desk_params() {
  SingleCodecParams p;
  p.ceps = CepsParams{96, 7, 2, 48, 5, 14};
  return p;
}

}  // namespace

TEST_CASE("single codec: redundancy identity and zero-deletion roundtrip") {
  SingleCodecParams p = desk_params();
  SingleContextualCodec codec(p);
  VtShortCode short_code(p.h_bits());
  CHECK(codec.message_bits() == p.ceps.n - 1);
  CHECK(codec.redundancy() == 4 + p.h_bits() + short_code.redundancy());
  SplitMix64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    BitString msg;
    for (std::size_t i = 0; i < codec.message_bits(); ++i) msg.push_back(rng.bit());
    BitString cw = codec.encode(msg);
    REQUIRE(cw.size() == codec.codeword_bits());
    REQUIRE(codec.decode(cw) == msg);
  }
}

TEST_CASE("single codec: exact recovery for every single contextual deletion") {
  SingleCodecParams p = desk_params();
  SingleContextualCodec codec(p);
  SplitMix64 rng(777);
  int deletions_exercised = 0;
  for (int trial = 0; trial < 400; ++trial) {
    BitString msg;
    for (std::size_t i = 0; i < codec.message_bits(); ++i) msg.push_back(rng.bit());
    BitString cw = codec.encode(msg);
    for (std::size_t pos : contextual_positions(cw, p.ceps.k)) {
      BitString y = delete_at(cw, pos);
      REQUIRE(codec.decode(y) == msg);
      ++deletions_exercised;
    }
  }
  REQUIRE(deletions_exercised > 100);
}

TEST_CASE("single codec: corrupted tails are flagged, not mis-decoded") {
  SingleCodecParams p = desk_params();
  SingleContextualCodec codec(p);
  BitString msg = BitString::zeros(codec.message_bits());
  BitString cw = codec.encode(msg);
  CHECK_THROWS(codec.decode(cw.prefix(cw.size() - 2)));  // two bits short
}

TEST_CASE("single codec rejects infeasible parameters") {
  SingleCodecParams p;
  // heavy window constraint crushes the count below 2^(n-1)
  p.ceps = CepsParams{24, 4, 3, 7, 3, 8};
  CHECK_THROWS(SingleContextualCodec(p));
}

TEST_CASE("Cor 1 at desk scale: VT classes of C_eps are single-deletion codes") {
  // partition a brute-enumerated C_eps by the fixed-modulus syndrome of
  // f(.); within a class all sequential 1-deletion sets must be disjoint
  CepsParams cp{14, 4, 2, 8, 2, 6};
  std::uint64_t m_vt = cp.rmax * (cp.lmax + cp.w) + 1;
  Dfa dfa = build_dfa_Ceps(cp);
  CountTable<std::uint64_t> t(dfa, cp.n);
  std::map<std::uint64_t, std::vector<BitString>> classes;
  std::uint64_t count = accepted_count(dfa, t, cp.n);
  for (std::uint64_t c = 0; c < count; ++c) {
    BitString x = unrank(dfa, t, c, cp.n);
    classes[vt_syndrome_mod(extract_f(x, cp.k, cp.l).subseq, m_vt)].push_back(x);
  }
  REQUIRE(classes.size() > 1);
  for (const auto& [a, members] : classes) {
    std::map<BitString, BitString> owner;
    for (const BitString& x : members)
      for (const BitString& y : deletion_set(x, cp.k, 1, DeletionMode::kSequential)) {
        auto [it, fresh] = owner.try_emplace(y, x);
        INFO("class " << a << ": " << it->second.to_string() << " vs " << x.to_string());
        REQUIRE((fresh || it->second == x));
      }
  }
}
