#pragma once

// The extraction map f(x): for every run of length >= k, the run and its
// following context up to the first opposite-parity run of length in
// [l, k-1] (inclusive), the next long run, or the end of the word. On the
// structured sets this turns contextual deletions of x into plain deletions
// of f(x), and x is recoverable from (y, f(y), f(x)).

#include <set>
#include <stdexcept>
#include <vector>

#include "ctxdel/bitseq.hpp"

namespace ctxdel {

struct Extraction {
  BitString subseq;
  // maximal contiguous blocks of f(x) inside x, as (1-indexed start, length);
  // consecutive selected run ranges that touch are merged, so segments are
  // pairwise non-adjacent
  std::vector<std::pair<std::size_t, std::size_t>> segments;
};

inline Extraction extract_f(const BitString& x, int k, int l) {
  if (l >= k) throw std::invalid_argument("extract_f: l < k required");
  auto runs = decompose_runs(x).runs;
  std::size_t R = runs.size();
  std::vector<std::size_t> long_runs;  // 0-based run indices
  for (std::size_t i = 0; i < R; ++i)
    if (runs[i].len >= static_cast<std::size_t>(k)) long_runs.push_back(i);

  Extraction out;
  std::vector<std::pair<std::size_t, std::size_t>> run_ranges;  // [lo, hi] run indices
  for (std::size_t s = 0; s < long_runs.size(); ++s) {
    std::size_t lo = long_runs[s];
    std::size_t next_long = (s + 1 < long_runs.size()) ? long_runs[s + 1] : R;
    std::size_t hi = next_long - 1;  // default: up to the run before the next long one / end
    for (std::size_t j = lo + 1; j < next_long; ++j) {
      if (runs[j].bit != runs[lo].bit && runs[j].len >= static_cast<std::size_t>(l) &&
          runs[j].len <= static_cast<std::size_t>(k) - 1) {
        hi = j;
        break;
      }
    }
    run_ranges.push_back({lo, hi});
  }
  // merge touching ranges into maximal segments
  for (std::size_t i = 0; i < run_ranges.size(); ++i) {
    std::size_t lo = run_ranges[i].first, hi = run_ranges[i].second;
    while (i + 1 < run_ranges.size() && run_ranges[i + 1].first <= hi + 1) {
      hi = run_ranges[i + 1].second;
      ++i;
    }
    std::size_t start = runs[lo].start;
    std::size_t end = runs[hi].start + runs[hi].len;  // one past, 1-indexed
    out.segments.push_back({start, end - start});
  }
  for (const auto& [start, len] : out.segments)
    out.subseq.append(x.substr(start - 1, len));
  return out;
}

namespace detail {

// Embedding of w into p with the first character pinned to the front and,
// unless `open_end`, the last character pinned to the back. The anchored
// form captures "p arises from w by insertions strictly between the first
// and last symbol"; the open end additionally admits insertions after the
// last symbol, which happens only for a segment that reaches the end of the
// word (a trailing run may lose its head there, shortening the segment from
// the right).
inline bool anchored_supersequence(const BitString& w, const BitString& p, bool open_end) {
  if (w.empty()) return p.empty();
  if (p.size() < w.size()) return false;
  if (p.at(0) != w.at(0)) return false;
  if (open_end) {
    // subsequence with the first character anchored
    std::size_t wi = 1;
    for (std::size_t pi = 1; pi < p.size() && wi < w.size(); ++pi)
      if (p.at(pi) == w.at(wi)) ++wi;
    return wi == w.size();
  }
  if (w.size() == 1) return p.size() == 1;
  if (p.at(p.size() - 1) != w.at(w.size() - 1)) return false;
  std::size_t wi = 1;
  for (std::size_t pi = 1; pi + 1 < p.size() && wi + 1 < w.size(); ++pi)
    if (p.at(pi) == w.at(wi)) ++wi;
  return wi + 1 == w.size();
}

}  // namespace detail

// Recovers x from y, f(y) (with segment metadata), and f(x). Splits f(x)
// across the segments of f(y) so every segment content is an anchored
// supersequence of its y-counterpart, then substitutes the repaired contents
// back into y. All consistent splits are enumerated and must agree.
inline BitString reinsert(const BitString& y, const Extraction& f_y, const BitString& f_x) {
  std::size_t s_count = f_y.segments.size();
  std::vector<BitString> parts(s_count);
  std::set<BitString> results;

  std::size_t total_y = 0;
  for (const auto& [st, len] : f_y.segments) total_y += len;
  if (f_x.size() < total_y) throw std::invalid_argument("reinsert: f_x shorter than f_y");

  auto build = [&]() {
    BitString x;
    std::size_t y_pos = 0;  // 0-indexed
    for (std::size_t s = 0; s < s_count; ++s) {
      std::size_t seg_start = f_y.segments[s].first - 1;
      std::size_t seg_len = f_y.segments[s].second;
      x.append(y.substr(y_pos, seg_start - y_pos));
      x.append(parts[s]);
      y_pos = seg_start + seg_len;
    }
    x.append(y.substr(y_pos, y.size() - y_pos));
    results.insert(x);
  };

  auto rec = [&](auto&& self, std::size_t seg, std::size_t fx_pos) -> void {
    if (seg == s_count) {
      if (fx_pos == f_x.size()) build();
      return;
    }
    std::size_t remaining_min = 0;
    for (std::size_t t = seg; t < s_count; ++t) remaining_min += f_y.segments[t].second;
    std::size_t w_len = f_y.segments[seg].second;
    BitString w = y.substr(f_y.segments[seg].first - 1, w_len);
    bool open_end = seg + 1 == s_count &&
                    f_y.segments[seg].first - 1 + f_y.segments[seg].second == y.size();
    std::size_t max_extra = f_x.size() - fx_pos - remaining_min;
    for (std::size_t extra = 0; extra <= max_extra; ++extra) {
      BitString p = f_x.substr(fx_pos, w_len + extra);
      if (detail::anchored_supersequence(w, p, open_end)) {
        parts[seg] = p;
        self(self, seg + 1, fx_pos + w_len + extra);
      }
    }
  };
  rec(rec, 0, 0);

  if (results.empty()) throw std::invalid_argument("reinsert: no consistent alignment");
  if (results.size() != 1) throw std::logic_error("reinsert: ambiguous alignment");
  return *results.begin();
}

}  // namespace ctxdel
