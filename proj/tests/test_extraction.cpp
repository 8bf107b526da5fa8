#include <catch2/catch_amalgamated.hpp>

#include "ctxdel/ceps.hpp"
#include "ctxdel/channel.hpp"
#include "ctxdel/extraction.hpp"
#include "test_helpers.hpp"

using namespace ctxdel;

namespace {

// every accepted length-n word of a DFA
std::vector<BitString> enumerate_accepted(const Dfa& dfa, std::size_t n) {
  CountTable<std::uint64_t> t(dfa, n);
  std::vector<BitString> out;
  std::uint64_t count = accepted_count(dfa, t, n);
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(unrank(dfa, t, c, n));
  return out;
}

}  // namespace

TEST_CASE("extraction reproduces the worked k=5, l=3 example") {
  std::string xs = std::string("1") + "000000" + "100110000" + "1111" + "001110" +
                   "1111111" + "00" + "111111" + "01" + "000" + "11";
  std::string fs = std::string("000000100110000") + "1111" + "1111111" + "00" + "111111" +
                   "01" + "000";
  BitString x(xs);
  Extraction e = extract_f(x, 5, 3);
  CHECK(e.subseq == BitString(fs));
  REQUIRE(e.segments.size() == 2);
  CHECK(e.segments[0] == std::make_pair(std::size_t{2}, std::size_t{19}));
  CHECK(e.segments[1] == std::make_pair(std::size_t{27}, std::size_t{20}));
}

TEST_CASE("extraction of a word with no long run is empty") {
  Extraction e = extract_f(BitString("0101101"), 4, 2);
  CHECK(e.subseq.empty());
  CHECK(e.segments.empty());
}

TEST_CASE("Thm 6 properties over a brute-enumerated C_eps at tiny parameters") {
  // Properties 1-3 quantify over deletion patterns that are eligible in the
  // original word (the simultaneous model). Sequential cascades can merge
  // runs and leave the theorem's scope; the codecs handle those by exact
  // channel inversion and are exercised in their own suites.
  CepsParams p{14, 4, 2, 8, 2, 6};
  Dfa dfa = build_dfa_Ceps(p);
  auto members = enumerate_accepted(dfa, p.n);
  REQUIRE(members.size() > 100);

  for (const BitString& x : members) {
    Extraction fx = extract_f(x, p.k, p.l);
    // property 1: length bound
    REQUIRE(fx.subseq.size() <= p.rmax * (p.lmax + p.w));
    // segments are non-adjacent and concatenate to the subsequence
    for (std::size_t s = 1; s < fx.segments.size(); ++s)
      REQUIRE(fx.segments[s - 1].first + fx.segments[s - 1].second < fx.segments[s].first);

    for (const BitString& y : deletion_set(x, p.k, 2, DeletionMode::kSimultaneous)) {
      std::size_t dels = x.size() - y.size();
      Extraction fy = extract_f(y, p.k, p.l);
      // property 2: f(y) arises from f(x) by exactly `dels` deletions
      REQUIRE(fy.subseq.size() + dels == fx.subseq.size());
      // subsequence containment
      std::size_t i = 0;
      for (std::size_t j = 0; j < fx.subseq.size() && i < fy.subseq.size(); ++j)
        if (fx.subseq.at(j) == fy.subseq.at(i)) ++i;
      REQUIRE(i == fy.subseq.size());
      // property 3: reinsert recovers x
      REQUIRE(reinsert(y, fy, fx.subseq) == x);
    }

    // sequential traces: recovery still holds whenever the trace stays in
    // the theorem's scope (no cascade shortened/merged extra runs)
    for (const BitString& y : deletion_set(x, p.k, 2, DeletionMode::kSequential)) {
      std::size_t dels = x.size() - y.size();
      Extraction fy = extract_f(y, p.k, p.l);
      if (fy.subseq.size() + dels != fx.subseq.size()) continue;  // cascade
      REQUIRE(reinsert(y, fy, fx.subseq) == x);
    }
  }
}

TEST_CASE("reinsert with zero insertions returns y") {
  BitString y("0011010110");
  Extraction fy = extract_f(y, 3, 2);
  CHECK(reinsert(y, fy, fy.subseq) == y);
}
