// Copyright 2026 The ctclm Authors
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

#pragma once

#include <vector>

#include "matrix.hpp"

namespace ctclm {

struct Hypothesis {
  std::vector<int> labels;  // collapsed, blank-free
  double score = 0.0;       // log probability; <= 0 for normalized inputs

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

// Best path decoding: per-frame argmax (ties broken toward the lowest
// vocabulary index), then collapse. The score is the sum of the chosen
// frame log-probs, i.e. the probability of the single best path, not of the
// label sequence. T = 0 yields an empty hypothesis with score 0.
Hypothesis greedy_decode(const Matrix& lp);

// Prefix beam search merging paths by collapsed prefix, tracking
// blank-ending and non-blank-ending mass separately. Hypotheses come back
// sorted by descending score; exact ties order lexicographically by label
// sequence. Requires beam >= nbest >= 1. With an exhaustive beam the top
// hypothesis is the maximum-probability label sequence.
std::vector<Hypothesis> prefix_beam_decode(const Matrix& lp, int beam,
                                           int nbest);

}  // namespace ctclm
