#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "untangle/errors.hpp"

namespace untangle {

/// Finite sequence of positive labels, identified with all its rotations.
class CircularSequence {
 public:
  CircularSequence() = default;
  explicit CircularSequence(std::vector<int> labels) : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<int>& labels() const { return labels_; }
  int operator[](std::size_t i) const { return labels_.at(i); }

  /// Linear representative starting at position r.
  CircularSequence rotated(std::size_t r) const {
    if (labels_.empty()) return *this;
    std::vector<int> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) out[i] = labels_[(i + r) % labels_.size()];
    return CircularSequence(std::move(out));
  }

  CircularSequence reversed() const { return CircularSequence({labels_.rbegin(), labels_.rend()}); }

  CircularSequence without(std::size_t i) const {
    auto out = labels_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return CircularSequence(std::move(out));
  }

  /// Equality up to rotation.
  friend bool operator==(const CircularSequence& a, const CircularSequence& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t r = 0; r < a.size(); ++r) {
      bool same = true;
      for (std::size_t i = 0; i < a.size() && same; ++i) same = a.labels_[(i + r) % a.size()] == b.labels_[i];
      if (same) return true;
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const CircularSequence& s) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s.labels_[i];
    return os;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) out += (i ? " " : "") + std::to_string(labels_[i]);
    return out;
  }

 private:
  std::vector<int> labels_;
};

struct BlockParams {
  int k = 1;  // alphabet size
  int s = 1;  // number of blocks

  void validate() const {
    if (k < 1 || s < 1) throw ValidationError("block parameters need k >= 1 and s >= 1");
  }
};

/// s successive blocks 1 2 ... k.
inline CircularSequence make_block_sequence(BlockParams p) {
  p.validate();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.s));
  for (int b = 0; b < p.s; ++b)
    for (int x = 1; x <= p.k; ++x) out.push_back(x);
  return CircularSequence(std::move(out));
}

namespace detail {

// Cyclic alternation count of the sequence restricted to {x, y}: the number
// of maximal runs around the circle. Some rotation contains x y x y exactly
// when this reaches 4.
inline int cyclic_runs(const std::vector<int>& labels, int x, int y) {
  int runs = 0, first = 0, last = 0;
  for (int c : labels) {
    if (c != x && c != y) continue;
    if (runs == 0) {
      first = c;
      runs = 1;
    } else if (c != last) {
      ++runs;
    }
    last = c;
  }
  if (runs > 1 && first == last) --runs;
  return runs;
}

}  // namespace detail

/// Some rotation contains a (not necessarily contiguous) x y x y, x != y.
inline bool contains_xyxy(const CircularSequence& seq) {
  std::vector<int> alphabet = seq.labels();
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (detail::cyclic_runs(seq.labels(), alphabet[i], alphabet[j]) >= 4) return true;
  return false;
}

struct XyxyFreeResult {
  std::size_t length = 0;
  std::vector<std::size_t> witness_positions;  // increasing indices into the input
  CircularSequence witness;
};

inline constexpr std::size_t kExhaustiveCap = 24;

/// Longest circular subsequence of `seq` without an x y x y pattern, by
/// exhaustive include/exclude search. Branches are cut as soon as the partial
/// subsequence contains the pattern (containment is inherited by
/// supersequences) or cannot beat the incumbent.
inline XyxyFreeResult max_xyxy_free_length(const CircularSequence& seq, std::size_t cap = kExhaustiveCap) {
  const std::size_t n = seq.size();
  if (n > cap)
    throw CapacityError("exhaustive search capped at " + std::to_string(cap) + " elements, got " +
                        std::to_string(n));
  std::map<int, int> code;
  for (int c : seq.labels()) code.emplace(c, 0);
  int sigma = 0;
  for (auto& [label, id] : code) id = sigma++;
  std::vector<int> sym(n);
  for (std::size_t i = 0; i < n; ++i) sym[i] = code[seq[i]];

  struct PairState {
    int runs = 0, first = -1, last = -1;
  };
  const auto S = static_cast<std::size_t>(sigma);
  std::vector<PairState> pairs(S * S);
  std::vector<int> count(S, 0);
  std::vector<std::size_t> chosen, best;

  struct Saved {
    std::size_t index;
    PairState state;
  };
  std::vector<Saved> undo;

  // Appends symbol a; returns false if the pattern appears. Saved entries go
  // to `undo`; the caller restores them.
  auto push = [&](int a) {
    bool ok = true;
    for (int b = 0; b < sigma; ++b) {
      if (b == a || count[b] == 0) continue;
      const std::size_t idx = static_cast<std::size_t>(std::min(a, b)) * S + static_cast<std::size_t>(std::max(a, b));
      PairState& ps = pairs[idx];
      undo.push_back({idx, ps});
      if (ps.runs == 0) ps = {1, b, b};
      if (ps.last != a) {
        ++ps.runs;
        ps.last = a;
      }
      const int circular = ps.runs - (ps.first == ps.last ? 1 : 0);
      if (circular >= 4) ok = false;
    }
    ++count[a];
    return ok;
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (chosen.size() + (n - i) <= best.size()) return;
    if (i == n) {
      best = chosen;
      return;
    }
    const std::size_t mark = undo.size();
    if (push(sym[i])) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
    --count[sym[i]];
    while (undo.size() > mark) {
      pairs[undo.back().index] = undo.back().state;
      undo.pop_back();
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);

  XyxyFreeResult r;
  r.length = best.size();
  r.witness_positions = best;
  std::vector<int> labels;
  for (std::size_t i : best) labels.push_back(seq[i]);
  r.witness = CircularSequence(std::move(labels));
  return r;
}

struct LemmaCheck {
  BlockParams params;
  std::size_t max_length = 0;
  std::size_t bound = 0;  // k + s
  bool holds = false;
};

/// Exhaustively checks that every xyxy-free subsequence of S^{k,s} is
/// shorter than k + s.
inline LemmaCheck check_circle_lemma(BlockParams p, std::size_t cap = kExhaustiveCap) {
  p.validate();
  const auto r = max_xyxy_free_length(make_block_sequence(p), cap);
  LemmaCheck c{p, r.length, static_cast<std::size_t>(p.k + p.s), false};
  c.holds = c.max_length < c.bound;
  return c;
}

inline bool verify_circle_lemma(BlockParams p, std::size_t cap = kExhaustiveCap) {
  return check_circle_lemma(p, cap).holds;
}

}  // namespace untangle
