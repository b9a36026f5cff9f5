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

#include <cstdint>
#include <span>
#include <vector>

#include "augment.hpp"
#include "labels.hpp"

namespace ctclm {

struct EditStats {
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t ref_len = 0;

  int64_t distance() const { return substitutions + insertions + deletions; }

  EditStats& operator+=(const EditStats& o) {
    substitutions += o.substitutions;
    insertions += o.insertions;
    deletions += o.deletions;
    ref_len += o.ref_len;
    return *this;
  }
};

// Minimal substitutions+insertions+deletions via dynamic programming.
// Backtrace ties resolve preferring substitution, then deletion, then
// insertion, so the individual counts are deterministic.
EditStats edit_distance(std::span<const int> ref, std::span<const int> hyp);

// Corpus-level phone error rate: 100 * sum(S+I+D) / sum(ref_len), pooled
// across utterances. With strip set, both sides pass through strip_landmarks
// first. Zero total reference length raises an undefined-rate error.
double per_percent(const PhoneSet& ps, const std::vector<LabelSequence>& refs,
                   const std::vector<LabelSequence>& hyps, bool strip,
                   EditStats* pooled = nullptr);

}  // namespace ctclm
