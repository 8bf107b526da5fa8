#include <catch2/catch_amalgamated.hpp>

#include "ctxdel/bitseq.hpp"
#include "ctxdel/rng.hpp"
#include "test_helpers.hpp"

using namespace ctxdel;

TEST_CASE("decompose_runs matches the worked factorisation") {
  auto d = decompose_runs(BitString("0111001"));
  REQUIRE(d.runs.size() == 4);
  CHECK(d.runs[0].bit == 0);
  CHECK(d.runs[0].len == 1);
  CHECK(d.runs[1].bit == 1);
  CHECK(d.runs[1].len == 3);
  CHECK(d.runs[2].bit == 0);
  CHECK(d.runs[2].len == 2);
  CHECK(d.runs[3].bit == 1);
  CHECK(d.runs[3].len == 1);
  CHECK(d.runs[1].start == 2);
  CHECK(d.runs[3].start == 7);
}

TEST_CASE("decompose_runs edge cases") {
  CHECK(decompose_runs(BitString("")).runs.empty());
  auto d = decompose_runs(BitString("1111"));
  REQUIRE(d.runs.size() == 1);
  CHECK(d.runs[0].bit == 1);
  CHECK(d.runs[0].len == 4);
}

TEST_CASE("decompose_runs re-concatenation is the identity, exhaustive n <= 16") {
  for (std::size_t n : {0, 1, 2, 3, 7, 10, 16}) {
    if (n >= 10) {
      // sample instead of full sweep at the top sizes to keep runtime sane
      SplitMix64 rng(n);
      for (int trial = 0; trial < 2000; ++trial) {
        BitString x = BitString::from_value(rng.below(std::uint64_t{1} << n), n);
        auto d = decompose_runs(x);
        REQUIRE(d.concat() == x);
        REQUIRE(d.total_length() == n);
        for (std::size_t i = 1; i < d.runs.size(); ++i) {
          REQUIRE(d.runs[i].bit != d.runs[i - 1].bit);
          REQUIRE(d.runs[i].start == d.runs[i - 1].start + d.runs[i - 1].len);
        }
      }
    } else {
      for (const auto& x : testutil::all_words(n)) REQUIRE(decompose_runs(x).concat() == x);
    }
  }
}

TEST_CASE("contains_any spec examples") {
  PatternSet p{"0010", "1101"};
  auto r1 = contains_any(BitString("110100"), p);
  CHECK(r1.found);
  CHECK(r1.position == 1);
  CHECK_FALSE(contains_any(BitString("0101"), p).found);
}

TEST_CASE("contains_any agrees with a naive quadratic scan") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    // random pattern set of 1..4 patterns with lengths 1..6
    PatternSet p;
    int m = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < m; ++i) {
      std::size_t len = 1 + rng.below(6);
      p.patterns.push_back(BitString::from_value(rng.below(std::uint64_t{1} << len), len));
    }
    std::size_t n = rng.below(13);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += 1 + rng.below(5)) {
      BitString x = BitString::from_value(v, n);
      bool expect = testutil::naive_contains_any(x, p);
      auto got = contains_any(x, p);
      REQUIRE(got.found == expect);
      if (got.found) {
        // reported position must actually start an occurrence
        bool starts = false;
        std::string t = x.to_string();
        for (const auto& q : p.patterns) {
          std::string qs = q.to_string();
          if (got.position - 1 + qs.size() <= t.size() &&
              t.compare(got.position - 1, qs.size(), qs) == 0)
            starts = true;
        }
        REQUIRE(starts);
      }
    }
  }
}

TEST_CASE("complement examples and involution") {
  CHECK(BitString("0010").complement() == BitString("1101"));
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.below(64);
    BitString x = BitString::from_value(rng.below(n ? (std::uint64_t{1} << std::min<std::size_t>(n, 63)) : 1), n);
    REQUIRE(x.complement().complement() == x);
    // complement maps runs to runs of the same lengths
    auto dx = decompose_runs(x);
    auto dc = decompose_runs(x.complement());
    REQUIRE(dx.runs.size() == dc.runs.size());
    for (std::size_t i = 0; i < dx.runs.size(); ++i) {
      REQUIRE(dx.runs[i].len == dc.runs[i].len);
      REQUIRE(dx.runs[i].bit == 1 - dc.runs[i].bit);
    }
  }
}

TEST_CASE("pattern set reduction check") {
  PatternSet reduced{"0010", "1101"};
  CHECK(reduced.is_reduced());
  PatternSet not_reduced{"0010", "001"};
  CHECK_FALSE(not_reduced.is_reduced());
  PatternSet dup{"0010", "0010"};
  CHECK_FALSE(dup.is_reduced());
}

TEST_CASE("packed bitstring primitives") {
  BitString x("01101");
  CHECK(x.size() == 5);
  CHECK(x.at(0) == 0);
  CHECK(x.at(1) == 1);
  CHECK(x.to_string() == "01101");
  CHECK(x.erased(2).to_string() == "0101");
  CHECK(x.inserted(0, 1).to_string() == "101101");
  CHECK(x.inserted(5, 0).to_string() == "011010");
  CHECK(x.substr(1, 3).to_string() == "110");
  CHECK(x.value<std::uint64_t>() == 13);
  CHECK(BitString::from_value(std::uint64_t{13}, 5) == x);
  // crossing the 64-bit word boundary
  BitString big;
  for (int i = 0; i < 131; ++i) big.push_back(i % 3 == 0);
  BitString copy = big;
  copy = copy.complement().complement();
  REQUIRE(copy == big);
  CHECK((big ^ big.complement()) == BitString::ones(131));
}
