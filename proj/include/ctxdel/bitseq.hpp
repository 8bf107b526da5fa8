#pragma once

// Core binary-sequence types: packed bit strings, alternating-run
// decomposition, multi-pattern substring scanning, complements.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctxdel {

// Length-n binary word. Storage is packed into 64-bit words; positions in
// operation contracts are 1-indexed (matching x_1..x_n), accessors below are
// 0-indexed and callers convert at the boundary.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::string_view ascii) {
    words_.reserve(ascii.size() / 64 + 1);
    for (char c : ascii) {
      if (c == '0')
        push_back(0);
      else if (c == '1')
        push_back(1);
      else
        throw std::invalid_argument("BitString: expected only '0'/'1'");
    }
  }

  static BitString run_of(int bit, std::size_t len) {
    BitString s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(bit);
    return s;
  }
  static BitString zeros(std::size_t n) { return run_of(0, n); }
  static BitString ones(std::size_t n) { return run_of(1, n); }

  // Alternating word of length n starting with `first`.
  static BitString alternating(int first, std::size_t n) {
    BitString s;
    for (std::size_t i = 0; i < n; ++i) s.push_back((first + i) & 1);
    return s;
  }

  // Value of the word read MSB-first. Int may be any integer type wide
  // enough, including boost cpp_int.
  template <class Int>
  Int value() const {
    Int v = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      v <<= 1;
      if (at(i)) v += 1;
    }
    return v;
  }

  template <class Int>
  static BitString from_value(Int v, std::size_t nbits) {
    BitString s = zeros(nbits);
    for (std::size_t i = nbits; i-- > 0;) {
      if ((v & 1) != 0) s.set(i, 1);
      v >>= 1;
    }
    if (v != 0) throw std::invalid_argument("from_value: value needs more than nbits bits");
    return s;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  int at(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  int operator[](std::size_t i) const { return at(i); }

  void set(std::size_t i, int b) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (b)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void push_back(int b) {
    if ((n_ & 63) == 0) words_.push_back(0);
    if (b) words_[n_ >> 6] |= std::uint64_t{1} << (n_ & 63);
    ++n_;
  }

  void append(const BitString& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other.at(i));
  }

  BitString substr(std::size_t pos, std::size_t len) const {
    BitString s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(at(pos + i));
    return s;
  }

  BitString prefix(std::size_t len) const { return substr(0, len); }
  BitString suffix(std::size_t len) const { return substr(n_ - len, len); }

  // Copy with the bit at 0-indexed position `pos` removed.
  BitString erased(std::size_t pos) const {
    BitString s;
    for (std::size_t i = 0; i < n_; ++i)
      if (i != pos) s.push_back(at(i));
    return s;
  }

  // Copy with bit b inserted so that it lands at 0-indexed position `pos`.
  BitString inserted(std::size_t pos, int b) const {
    BitString s;
    for (std::size_t i = 0; i < pos; ++i) s.push_back(at(i));
    s.push_back(b);
    for (std::size_t i = pos; i < n_; ++i) s.push_back(at(i));
    return s;
  }

  BitString complement() const {
    BitString s = *this;
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~s.words_[w];
    s.clear_tail();
    return s;
  }

  BitString operator^(const BitString& other) const {
    if (n_ != other.n_) throw std::invalid_argument("xor: length mismatch");
    BitString s = *this;
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] ^= other.words_[w];
    return s;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(at(i) ? '1' : '0');
    return out;
  }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

  // Lexicographic, '0' < '1'; a proper prefix sorts first.
  friend bool operator<(const BitString& a, const BitString& b) {
    std::size_t m = std::min(a.n_, b.n_);
    for (std::size_t i = 0; i < m; ++i) {
      int x = a.at(i), y = b.at(i);
      if (x != y) return x < y;
    }
    return a.n_ < b.n_;
  }

  std::uint64_t fnv_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    h ^= n_;
    h *= 1099511628211ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void clear_tail() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    if (words_.size() > (n_ + 63) / 64) words_.resize((n_ + 63) / 64);
  }

  std::vector<std::uint64_t> words_;
  std::size_t n_ = 0;
};

struct BitStringHash {
  std::size_t operator()(const BitString& s) const { return s.fnv_hash(); }
};

// Maximal block of equal consecutive bits. `start` is 1-indexed.
struct Run {
  int bit;
  std::size_t start;
  std::size_t len;
};

// The unique factorisation of a word into alternating runs.
struct RunDecomposition {
  std::vector<Run> runs;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const Run& r : runs) n += r.len;
    return n;
  }

  BitString concat() const {
    BitString s;
    for (const Run& r : runs)
      for (std::size_t i = 0; i < r.len; ++i) s.push_back(r.bit);
    return s;
  }
};

inline RunDecomposition decompose_runs(const BitString& x) {
  RunDecomposition d;
  std::size_t i = 0;
  while (i < x.size()) {
    std::size_t j = i;
    while (j < x.size() && x.at(j) == x.at(i)) ++j;
    d.runs.push_back(Run{x.at(i), i + 1, j - i});
    i = j;
  }
  return d;
}

// Set of forbidden/query patterns. A set is "reduced" when no member is a
// proper substring of another.
struct PatternSet {
  std::vector<BitString> patterns;

  PatternSet() = default;
  explicit PatternSet(std::vector<BitString> p) : patterns(std::move(p)) {}
  PatternSet(std::initializer_list<std::string_view> asciis) {
    for (auto a : asciis) patterns.emplace_back(a);
  }

  std::size_t size() const { return patterns.size(); }

  PatternSet complemented() const {
    PatternSet out;
    for (const auto& p : patterns) out.patterns.push_back(p.complement());
    return out;
  }

  PatternSet united(const PatternSet& other) const {
    PatternSet out = *this;
    for (const auto& p : other.patterns) {
      bool dup = false;
      for (const auto& q : out.patterns) dup = dup || (p == q);
      if (!dup) out.patterns.push_back(p);
    }
    return out;
  }

  bool is_reduced() const {
    for (std::size_t i = 0; i < patterns.size(); ++i)
      for (std::size_t j = 0; j < patterns.size(); ++j) {
        if (i == j) continue;
        if (patterns[j].size() > patterns[i].size()) continue;
        if (patterns[j].size() == patterns[i].size()) {
          if (patterns[i] == patterns[j]) return false;  // duplicate entry
          continue;
        }
        for (std::size_t off = 0; off + patterns[j].size() <= patterns[i].size(); ++off)
          if (patterns[i].substr(off, patterns[j].size()) == patterns[j]) return false;
      }
    return true;
  }
};

inline BitString complement(const BitString& x) { return x.complement(); }
inline PatternSet complement_set(const PatternSet& p) { return p.complemented(); }

// Aho-Corasick automaton over {0,1} with failure links collapsed into a
// total goto function. Serves both the contains_any scan and the
// pattern-avoider DFA construction.
class PatternMatcher {
 public:
  explicit PatternMatcher(const PatternSet& set) {
    nodes_.push_back(Node{});
    for (const BitString& p : set.patterns) {
      if (p.empty()) throw std::invalid_argument("PatternMatcher: empty pattern");
      std::uint32_t q = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        int b = p.at(i);
        if (nodes_[q].child[b] == kNone) {
          nodes_[q].child[b] = static_cast<std::uint32_t>(nodes_.size());
          nodes_.push_back(Node{});
        }
        q = nodes_[q].child[b];
      }
      nodes_[q].terminal = true;
      nodes_[q].match_len = std::max(nodes_[q].match_len, p.size());
    }
    build_links();
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::uint32_t step(std::uint32_t q, int b) const { return nodes_[q].go[b]; }
  bool terminal(std::uint32_t q) const { return nodes_[q].terminal; }

  // Smallest 1-indexed start position over all occurrences, if any.
  std::optional<std::size_t> first_match(const BitString& x) const {
    std::uint32_t q = 0;
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      q = step(q, x.at(i));
      if (nodes_[q].terminal) {
        std::size_t start = i + 2 - nodes_[q].match_len;
        if (!found || start < best) best = start;
        found = true;
      }
    }
    if (found) return best;
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  struct Node {
    std::array<std::uint32_t, 2> child{kNone, kNone};
    std::array<std::uint32_t, 2> go{0, 0};
    std::uint32_t fail = 0;
    bool terminal = false;
    std::size_t match_len = 0;  // longest pattern ending at this node
  };

  // BFS failure-link construction; `terminal` and `match_len` propagate
  // through suffix links so a match is flagged the moment any pattern ends.
  void build_links() {
    std::vector<std::uint32_t> order;
    for (int b = 0; b < 2; ++b) {
      std::uint32_t c = nodes_[0].child[b];
      if (c == kNone) {
        nodes_[0].go[b] = 0;
      } else {
        nodes_[c].fail = 0;
        nodes_[0].go[b] = c;
        order.push_back(c);
      }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t q = order[head];
      const Node& f = nodes_[nodes_[q].fail];
      if (f.terminal) {
        nodes_[q].terminal = true;
        nodes_[q].match_len = std::max(nodes_[q].match_len, f.match_len);
      }
      for (int b = 0; b < 2; ++b) {
        std::uint32_t c = nodes_[q].child[b];
        std::uint32_t via_fail = nodes_[nodes_[q].fail].go[b];
        if (c == kNone) {
          nodes_[q].go[b] = via_fail;
        } else {
          nodes_[c].fail = via_fail;
          nodes_[q].go[b] = c;
          order.push_back(c);
        }
      }
    }
  }

  std::vector<Node> nodes_;
};

struct MatchResult {
  bool found;
  std::size_t position;  // 1-indexed start of the first match; 0 when absent
};

// Multi-pattern substring scan, linear in |x| plus total pattern length.
inline MatchResult contains_any(const BitString& x, const PatternSet& p) {
  if (p.patterns.empty()) return {false, 0};
  PatternMatcher m(p);
  auto pos = m.first_match(x);
  if (pos) return {true, *pos};
  return {false, 0};
}

}  // namespace ctxdel
