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

#ifndef IRMA_TRACE_HPP_
#define IRMA_TRACE_HPP_

#include <cstdint>
#include <ostream>
#include <string_view>

#include "irma/engine.hpp"

namespace irma {

// Step trace, one TSV row per event:
//   step  event  u  v  marks  degree_gap  correct
//
// Pair events: seed / spread / insert, with the pair's mark count at event
// time and its degree gap. Marker rows use '-' for the pair columns:
//   around: marks = noisy-seed size after capping, degree_gap = 1 if capped
//   epoch:  marks = epoch index
//   iter:   marks = admission threshold, degree_gap = phase (0 base
//           percolation, 1 repair, 2 explore)
// The correct column is 1/0 against the ground truth when one was supplied,
// '-' otherwise. Traces replay byte-identically for identical runs.
class TraceWriter {
 public:
  enum class Mode { kSequential, kParallel, kOnce };

  TraceWriter(std::ostream& out, Mode mode) : out_(out) {
    out_ << "# irma trace v1 mode=" << mode_name(mode) << '\n';
    out_ << "step\tevent\tu\tv\tmarks\tdegree_gap\tcorrect\n";
  }

  void set_truth(const Matching* truth) { truth_ = truth; }

  void pair_event(std::string_view event, CandidatePair p, std::uint32_t marks,
                  std::uint32_t gap) {
    out_ << step_++ << '\t' << event << '\t' << p.u << '\t' << p.v << '\t'
         << marks << '\t' << gap << '\t';
    if (truth_ == nullptr) {
      out_ << '-';
    } else {
      out_ << (p.u < truth_->left_size() && truth_->contains(p) ? '1' : '0');
    }
    out_ << '\n';
  }

  void marker(std::string_view event, std::uint64_t a, std::uint64_t b) {
    out_ << step_++ << '\t' << event << "\t-\t-\t" << a << '\t' << b << "\t-\n";
  }

  static std::string_view mode_name(Mode mode) {
    switch (mode) {
      case Mode::kParallel:
        return "parallel";
      case Mode::kOnce:
        return "once";
      default:
        return "sequential";
    }
  }

 private:
  std::ostream& out_;
  const Matching* truth_ = nullptr;
  std::uint64_t step_ = 0;
};

}  // namespace irma

#endif  // IRMA_TRACE_HPP_
