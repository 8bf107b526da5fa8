#pragma once

// Contextual-deletion semantics: deletion-eligible positions, the
// probabilistic channel D_{k,p}, its extremal p=1 limit, and the
// combinatorial deletion sets / inverse balls used by the oracles.
//
// A deletion of x_i is contextual with threshold k when x_i is the first bit
// of a run and the immediately preceding run has length >= k.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "ctxdel/bitseq.hpp"
#include "ctxdel/rng.hpp"

namespace ctxdel {

struct ChannelParams {
  int k = 1;
  double p = 1.0;

  void validate() const {
    if (k < 1) throw std::invalid_argument("ChannelParams: k >= 1 required");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("ChannelParams: p in [0,1] required");
  }
};

enum class DeletionMode { kSimultaneous, kSequential };

// Ordered deletion positions, 1-indexed. Sequential positions refer to the
// string after the previous deletions were applied; simultaneous positions
// are strictly increasing on the original string.
struct DeletionTrace {
  DeletionMode mode = DeletionMode::kSimultaneous;
  std::vector<std::size_t> positions;
};

// All 1-indexed positions of x eligible for a contextual deletion.
inline std::vector<std::size_t> contextual_positions(const BitString& x, int k) {
  if (k < 1) throw std::invalid_argument("contextual_positions: k >= 1 required");
  std::vector<std::size_t> out;
  RunDecomposition d = decompose_runs(x);
  for (std::size_t r = 1; r < d.runs.size(); ++r)
    if (d.runs[r - 1].len >= static_cast<std::size_t>(k)) out.push_back(d.runs[r].start);
  return out;
}

// Deletes one bit (1-indexed).
inline BitString delete_at(const BitString& x, std::size_t pos1) {
  if (pos1 < 1 || pos1 > x.size()) throw std::out_of_range("delete_at: bad position");
  return x.erased(pos1 - 1);
}

// The extremal channel D_{k,1}: every eligible position of the original x is
// deleted at once. Equal to right-to-left sequential application (checked
// property, exercised by tests).
inline BitString apply_extremal(const BitString& x, int k) {
  auto pos = contextual_positions(x, k);
  BitString y;
  std::size_t next = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (next < pos.size() && pos[next] == i + 1) {
      ++next;
      continue;
    }
    y.push_back(x.at(i));
  }
  return y;
}

struct ChannelOutput {
  BitString output;
  DeletionTrace trace;
};

// D_{k,p}: each eligible position of the original x is deleted independently
// with probability p, driven by the seeded deterministic RNG.
inline ChannelOutput sample_channel(const BitString& x, const ChannelParams& params,
                                    std::uint64_t seed) {
  params.validate();
  SplitMix64 rng(seed);
  auto eligible = contextual_positions(x, params.k);
  DeletionTrace trace;
  trace.mode = DeletionMode::kSimultaneous;
  for (std::size_t p1 : eligible)
    if (rng.bernoulli(params.p)) trace.positions.push_back(p1);
  BitString y;
  std::size_t next = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (next < trace.positions.size() && trace.positions[next] == i + 1) {
      ++next;
      continue;
    }
    y.push_back(x.at(i));
  }
  return {y, trace};
}

// D_t^{(k)}(x): everything reachable by at most t contextual deletions,
// including x itself.
//
// Sequential mode is a BFS where each step deletes one position eligible in
// the then-current string (cascades allowed); simultaneous mode deletes any
// subset of at most t positions eligible in the original string.
inline std::set<BitString> deletion_set(const BitString& x, int k, int t,
                                        DeletionMode mode = DeletionMode::kSequential) {
  if (t < 0) throw std::invalid_argument("deletion_set: t >= 0 required");
  std::set<BitString> out;
  out.insert(x);
  if (mode == DeletionMode::kSequential) {
    std::unordered_set<BitString, BitStringHash> seen{x};
    std::vector<BitString> frontier{x};
    for (int depth = 0; depth < t && !frontier.empty(); ++depth) {
      std::vector<BitString> next_frontier;
      for (const BitString& s : frontier) {
        for (std::size_t p1 : contextual_positions(s, k)) {
          BitString y = delete_at(s, p1);
          if (seen.insert(y).second) {
            out.insert(y);
            next_frontier.push_back(y);
          }
        }
      }
      frontier = std::move(next_frontier);
    }
  } else {
    auto eligible = contextual_positions(x, k);
    std::size_t m = eligible.size();
    std::vector<std::size_t> pick;
    // enumerate subsets of size <= t
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
      if (!pick.empty()) {
        BitString y;
        std::size_t next = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (next < pick.size() && pick[next] == i + 1) {
            ++next;
            continue;
          }
          y.push_back(x.at(i));
        }
        out.insert(y);
      }
      if (remaining == 0) return;
      for (std::size_t j = from; j < m; ++j) {
        pick.push_back(eligible[j]);
        self(self, j + 1, remaining - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, t);
  }
  return out;
}

// Applies an explicit trace; used by tests replaying specific patterns.
inline BitString apply_trace(const BitString& x, int k, const DeletionTrace& trace) {
  if (trace.mode == DeletionMode::kSequential) {
    BitString s = x;
    for (std::size_t p1 : trace.positions) {
      auto eligible = contextual_positions(s, k);
      bool ok = false;
      for (std::size_t e : eligible) ok = ok || (e == p1);
      if (!ok) throw std::invalid_argument("apply_trace: position not eligible");
      s = delete_at(s, p1);
    }
    return s;
  }
  BitString y;
  std::size_t next = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (next < trace.positions.size() && trace.positions[next] == i + 1) {
      ++next;
      continue;
    }
    y.push_back(x.at(i));
  }
  return y;
}

// All z with |z| = |w| + t whose sequential application of exactly t
// contextual deletions can yield w: the exact inverse image of one channel
// step count, built by inverting deletions one at a time. A reverse step
// inserts the complement bit right after the p-th symbol of a run of length
// lambda >= k, for any p in [k, lambda]; this enumerates every eligible
// deletion of the would-be source string.
inline std::vector<BitString> sequential_insertion_candidates(const BitString& w, int k, int t) {
  std::vector<BitString> layer{w};
  std::unordered_set<BitString, BitStringHash> seen{w};
  for (int step = 0; step < t; ++step) {
    std::vector<BitString> next_layer;
    std::unordered_set<BitString, BitStringHash> next_seen;
    for (const BitString& s : layer) {
      for (const Run& r : decompose_runs(s).runs) {
        if (r.len < static_cast<std::size_t>(k)) continue;
        for (std::size_t p = k; p <= r.len; ++p) {
          // insert after the p-th bit of the run (0-indexed slot)
          BitString z = s.inserted(r.start - 1 + p, 1 - r.bit);
          if (next_seen.insert(z).second) next_layer.push_back(z);
        }
      }
    }
    layer = std::move(next_layer);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// B_t^{(k)}: all length-n_src strings z whose deletion set meets that of x.
// Exhaustive insertion search; intended only as a desk-scale oracle.
inline std::set<BitString> inverse_ball(const BitString& x, int k, int t, std::size_t n_src,
                                        DeletionMode mode = DeletionMode::kSequential) {
  if (n_src < x.size()) throw std::invalid_argument("inverse_ball: n_src >= |x| required");
  if (n_src - x.size() > static_cast<std::size_t>(t))
    throw std::invalid_argument("inverse_ball: n_src - |x| > t");
  std::set<BitString> dx = deletion_set(x, k, t, mode);
  // candidates: every w in D_t(x) re-extended to length n_src by insertions
  std::set<BitString> out;
  std::unordered_set<BitString, BitStringHash> seen;
  for (const BitString& w : dx) {
    // grow w back to n_src by inserting bits in all ways
    std::unordered_set<BitString, BitStringHash> layer{w};
    while (!layer.empty() && layer.begin()->size() < n_src) {
      std::unordered_set<BitString, BitStringHash> next_layer;
      for (const BitString& s : layer)
        for (std::size_t pos = 0; pos <= s.size(); ++pos)
          for (int b = 0; b < 2; ++b) next_layer.insert(s.inserted(pos, b));
      layer = std::move(next_layer);
    }
    for (const BitString& z : layer) {
      if (!seen.insert(z).second) continue;
      // z qualifies iff D_t(z) meets D_t(x)
      std::set<BitString> dz = deletion_set(z, k, t, mode);
      bool hit = false;
      for (const BitString& u : dz)
        if (dx.count(u)) {
          hit = true;
          break;
        }
      if (hit) out.insert(z);
    }
  }
  return out;
}

}  // namespace ctxdel
