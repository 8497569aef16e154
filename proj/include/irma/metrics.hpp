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

#ifndef IRMA_METRICS_HPP_
#define IRMA_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "irma/engine.hpp"
#include "irma/graph.hpp"

namespace irma {

struct MetricsReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t weight = 0;
  std::size_t matched_count = 0;
  std::size_t true_matches = 0;  // |M intersect R|
  double weight_per_pair = 0.0;
  // An empty matching leaves precision 0/0; we report 0 and set this flag.
  bool undefined_precision = false;
};

inline MetricsReport score_matching(const Matching& m, const Matching& truth,
                                    const Graph& g1, const Graph& g2) {
  MetricsReport r;
  r.matched_count = m.size();
  for (const CandidatePair p : m.insertion_log()) {
    if (p.u < truth.left_size() && truth.contains(p)) ++r.true_matches;
  }
  if (m.empty()) {
    r.undefined_precision = true;
  } else {
    r.precision = static_cast<double>(r.true_matches) / static_cast<double>(m.size());
  }
  if (truth.size() > 0) {
    r.recall = static_cast<double>(r.true_matches) / static_cast<double>(truth.size());
  }
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  r.weight = matching_weight(g1, g2, m);
  if (m.size() > 0) {
    r.weight_per_pair = static_cast<double>(r.weight) / static_cast<double>(m.size());
  }
  return r;
}

// Recall restricted to ground-truth pairs that could ever collect two marks
// from correct percolation, i.e. pairs with at least two true common
// neighbors. Diagnostic companion to the plain recall, whose denominator
// includes unreachable pairs.
inline double reachable_recall(const Matching& m, const Matching& truth,
                               const Graph& g1, const Graph& g2) {
  std::size_t reachable = 0;
  std::size_t hit = 0;
  for (const CandidatePair p : truth.insertion_log()) {
    std::uint32_t common = 0;
    for (VertexId nu : g1.neighbors(p.u)) {
      const auto nv = truth.image(nu);
      if (nv && g2.has_edge(p.v, *nv) && ++common >= 2) break;
    }
    if (common < 2) continue;
    ++reachable;
    if (m.contains(p)) ++hit;
  }
  if (reachable == 0) return 0.0;
  return static_cast<double>(hit) / static_cast<double>(reachable);
}

// Average-rank Spearman correlation. NaN-free: returns 0 when either side is
// constant.
inline double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw std::invalid_argument("spearman needs two equal series of length >= 2");
  }
  auto ranks = [](std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
      const double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // ties share ranks
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

inline double mean_of(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

inline double stderr_of(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace irma

#endif  // IRMA_METRICS_HPP_
