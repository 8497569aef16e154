// Copyright 2026 The irma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRMA_ENGINE_HPP_
#define IRMA_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "irma/graph.hpp"

namespace irma {

// A candidate pair [u, v] with u in G1 and v in G2, packed into one 64-bit
// key so hash tables and tie-breaks work on a single integer.
struct CandidatePair {
  VertexId u = 0;
  VertexId v = 0;

  std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  static CandidatePair from_key(std::uint64_t k) noexcept {
    return {static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xffffffffull)};
  }

  friend bool operator==(CandidatePair a, CandidatePair b) noexcept {
    return a.u == b.u && a.v == b.v;
  }
};

// Candidate ordering: more marks first, then smaller degree gap, then smaller
// pair key. The degree gap realizes the infinitesimal-epsilon penalty as a
// lexicographic rank instead of a float, so ties behave identically on every
// platform; the pair key makes the order total.
struct ScoreKey {
  std::uint32_t marks = 0;
  std::uint32_t degree_gap = 0;
  std::uint64_t tie_key = 0;

  // "worse than": suitable for a max-oriented std::priority_queue.
  friend bool operator<(const ScoreKey& a, const ScoreKey& b) noexcept {
    if (a.marks != b.marks) return a.marks < b.marks;
    if (a.degree_gap != b.degree_gap) return a.degree_gap > b.degree_gap;
    return a.tie_key > b.tie_key;
  }

  friend bool operator==(const ScoreKey& a, const ScoreKey& b) noexcept {
    return a.marks == b.marks && a.degree_gap == b.degree_gap && a.tie_key == b.tie_key;
  }
};

inline std::uint32_t degree_gap(const Graph& g1, const Graph& g2, CandidatePair p) {
  const auto d1 = g1.degree(p.u);
  const auto d2 = g2.degree(p.v);
  return d1 > d2 ? d1 - d2 : d2 - d1;
}

inline ScoreKey make_score_key(const Graph& g1, const Graph& g2, CandidatePair p,
                               std::uint32_t marks) {
  return {marks, degree_gap(g1, g2, p), p.key()};
}

// Per-iteration mark counters. Absent key means zero; counts only grow.
class MarkTable {
 public:
  std::uint32_t add_mark(CandidatePair p) { return ++counts_[p.key()]; }

  std::uint32_t marks(CandidatePair p) const {
    auto it = counts_.find(p.key());
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  const std::unordered_map<std::uint64_t, std::uint32_t>& raw() const noexcept {
    return counts_;
  }

  void add_count(std::uint64_t key, std::uint32_t delta) { counts_[key] += delta; }

  // Key-sorted snapshot; the canonical order for traces and digests.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted_entries() const {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out(counts_.begin(),
                                                             counts_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> counts_;
};

// Conflict-free partial bijection V1 -> V2 with its insertion order.
class Matching {
 public:
  Matching() = default;
  Matching(std::uint32_t n1, std::uint32_t n2)
      : forward_(n1, kUnmatched), backward_(n2, kUnmatched) {}

  std::uint32_t left_size() const noexcept {
    return static_cast<std::uint32_t>(forward_.size());
  }
  std::uint32_t right_size() const noexcept {
    return static_cast<std::uint32_t>(backward_.size());
  }

  // True when neither endpoint is used yet, i.e. p is unmatched and does not
  // conflict any pair already in the matching.
  bool can_insert(CandidatePair p) const {
    return forward_.at(p.u) == kUnmatched && backward_.at(p.v) == kUnmatched;
  }

  bool contains(CandidatePair p) const {
    return forward_.at(p.u) == static_cast<std::int64_t>(p.v);
  }

  void insert(CandidatePair p) {
    if (!can_insert(p)) throw std::logic_error("conflicting pair insertion");
    forward_[p.u] = p.v;
    backward_[p.v] = p.u;
    log_.push_back(p);
  }

  std::optional<VertexId> image(VertexId u) const {
    auto v = forward_.at(u);
    if (v == kUnmatched) return std::nullopt;
    return static_cast<VertexId>(v);
  }

  std::optional<VertexId> preimage(VertexId v) const {
    auto u = backward_.at(v);
    if (u == kUnmatched) return std::nullopt;
    return static_cast<VertexId>(u);
  }

  std::size_t size() const noexcept { return log_.size(); }
  bool empty() const noexcept { return log_.empty(); }
  std::span<const CandidatePair> insertion_log() const noexcept { return log_; }

 private:
  static constexpr std::int64_t kUnmatched = -1;
  std::vector<std::int64_t> forward_;
  std::vector<std::int64_t> backward_;
  std::vector<CandidatePair> log_;
};

// The set Z of pairs that already spread marks, in spread order.
class SpreadLog {
 public:
  bool contains(CandidatePair p) const { return used_.count(p.key()) != 0; }

  // False if p was already used.
  bool insert(CandidatePair p) {
    if (!used_.insert(p.key()).second) return false;
    order_.push_back(p);
    return true;
  }

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const CandidatePair> order() const noexcept { return order_; }

 private:
  std::unordered_set<std::uint64_t> used_;
  std::vector<CandidatePair> order_;
};

// Adds one mark to every neighboring pair of p, invoking
// on_mark(pair, new_count) per increment. Performs exactly
// deg1(u) * deg2(v) increments; a pair already in z is a no-op.
// Returns the number of increments.
template <typename OnMark>
std::size_t spread_marks(const Graph& g1, const Graph& g2, CandidatePair p,
                         MarkTable& table, SpreadLog& z, OnMark&& on_mark) {
  if (!z.insert(p)) return 0;
  std::size_t increments = 0;
  for (VertexId nu : g1.neighbors(p.u)) {
    for (VertexId nv : g2.neighbors(p.v)) {
      const CandidatePair q{nu, nv};
      on_mark(q, table.add_mark(q));
      ++increments;
    }
  }
  return increments;
}

inline std::size_t spread_marks(const Graph& g1, const Graph& g2, CandidatePair p,
                                MarkTable& table, SpreadLog& z) {
  return spread_marks(g1, g2, p, table, z, [](CandidatePair, std::uint32_t) {});
}

// Exhaustive-scan argmax over the mark table: the non-conflicting pair with
// maximal ScoreKey among pairs with at least `threshold` marks. When `prev`
// is given, a pair's effective count is max(current, previous-final) and the
// scan also covers pairs that only appear in `prev`. This is the reference
// semantics; the drivers use a lazy heap that must agree with it.
inline std::optional<CandidatePair> best_candidate(
    const Graph& g1, const Graph& g2, const MarkTable& table, const Matching& m,
    std::uint32_t threshold, const MarkTable* prev = nullptr) {
  if (threshold < 1) throw std::invalid_argument("threshold must be positive");
  std::optional<ScoreKey> best;
  CandidatePair best_pair;
  auto consider = [&](std::uint64_t key, std::uint32_t count) {
    const auto p = CandidatePair::from_key(key);
    if (prev != nullptr) count = std::max(count, prev->marks(p));
    if (count < threshold) return;
    if (!m.can_insert(p)) return;
    const ScoreKey k = make_score_key(g1, g2, p, count);
    if (!best || *best < k) {
      best = k;
      best_pair = p;
    }
  };
  for (const auto& [key, count] : table.raw()) consider(key, count);
  if (prev != nullptr) {
    for (const auto& [key, count] : prev->raw()) {
      if (table.marks(CandidatePair::from_key(key)) == 0) consider(key, count);
    }
  }
  if (!best) return std::nullopt;
  return best_pair;
}

// Number of G1 edges whose endpoints are both matched and whose images form
// a G2 edge (unordered edges counted once).
inline std::uint64_t matching_weight(const Graph& g1, const Graph& g2,
                                     const Matching& m) {
  std::uint64_t shared = 0;
  for (const CandidatePair p : m.insertion_log()) {
    for (VertexId nu : g1.neighbors(p.u)) {
      if (nu <= p.u) continue;  // each edge once, from its smaller endpoint
      const auto nv = m.image(nu);
      if (nv && g2.has_edge(p.v, *nv)) ++shared;
    }
  }
  return shared;
}

// Max-heap of score entries with lazy invalidation. Marks only grow within
// an iteration, so every increment pushes a fresh entry and stale ones are
// discarded on pop by comparing against the authoritative count.
class CandidateQueue {
 public:
  void push(ScoreKey key, CandidatePair p) { heap_.push(Entry{key, p}); }

  std::size_t size() const noexcept { return heap_.size(); }

  // Pops the best insertable pair whose authoritative count (from `current`)
  // still matches the entry and is >= threshold. Returns nullopt when the
  // best fresh entry falls below the threshold (the heap is left intact so
  // later mark growth can resurrect percolation).
  template <typename CountFn>
  std::optional<CandidatePair> pop_best(const Matching& m, std::uint32_t threshold,
                                        CountFn&& current) {
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      const std::uint32_t actual = current(top.pair);
      if (actual != top.key.marks) {
        heap_.pop();  // stale; a fresher entry ranks higher
        continue;
      }
      if (!m.can_insert(top.pair)) {
        heap_.pop();
        continue;
      }
      if (top.key.marks < threshold) return std::nullopt;
      heap_.pop();
      return top.pair;
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    ScoreKey key;
    CandidatePair pair;
    friend bool operator<(const Entry& a, const Entry& b) noexcept {
      return a.key < b.key;
    }
  };
  std::priority_queue<Entry> heap_;
};

// Shared run counters.
struct PercolationStats {
  std::uint64_t steps = 0;              // pairs matched beyond the seed
  std::uint64_t artificial_rounds = 0;  // noisy-seed regenerations that fired
  std::uint64_t spread_count = 0;       // |Z|
  std::uint64_t mark_increments = 0;    // total queue updates, sum of d1*d2 over Z
  std::uint64_t capped_rounds = 0;      // noisy-seed rounds clipped by the cap
  std::uint64_t epochs = 0;             // parallel variants only
};

}  // namespace irma

#endif  // IRMA_ENGINE_HPP_
