#pragma once

// Shared brute-force oracles for the test suites. Everything here is an
// independent reference path: naive scans and exhaustive enumerations that
// the library implementations are checked against.

#include <set>
#include <string>
#include <vector>

#include "ctxdel/bitseq.hpp"

namespace testutil {

using ctxdel::BitString;

// All 2^n words of length n, lexicographic.
inline std::vector<BitString> all_words(std::size_t n) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    out.push_back(BitString::from_value(v, n));
  return out;
}

// Quadratic substring scan.
inline bool naive_contains(const std::string& text, const std::string& pat) {
  return text.find(pat) != std::string::npos;
}

inline bool naive_contains_any(const BitString& x, const ctxdel::PatternSet& p) {
  std::string t = x.to_string();
  for (const auto& q : p.patterns)
    if (naive_contains(t, q.to_string())) return true;
  return false;
}

// Naive eligible-position scan, written against the definition directly:
// position i (1-indexed) qualifies iff x_i != x_{i-1} and the maximal block
// of equal bits ending at i-1 has length >= k.
inline std::vector<std::size_t> naive_contextual_positions(const BitString& x, int k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i <= x.size(); ++i) {
    if (x.at(i - 1) == x.at(i - 2)) continue;  // not the first bit of a run
    std::size_t len = 0;
    std::size_t j = i - 1;
    while (j >= 1 && x.at(j - 1) == x.at(i - 2)) {
      ++len;
      --j;
    }
    if (len >= static_cast<std::size_t>(k)) out.push_back(i);
  }
  return out;
}

}  // namespace testutil
