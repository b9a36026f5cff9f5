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

#include "score.hpp"

namespace ctclm {

EditStats edit_distance(std::span<const int> ref, std::span<const int> hyp) {
  const size_t R = ref.size();
  const size_t H = hyp.size();
  // d[i][j]: distance between ref[0..i) and hyp[0..j), flattened.
  std::vector<int64_t> d((R + 1) * (H + 1), 0);
  auto at = [&](size_t i, size_t j) -> int64_t& { return d[i * (H + 1) + j]; };
  for (size_t i = 0; i <= R; ++i) at(i, 0) = static_cast<int64_t>(i);
  for (size_t j = 0; j <= H; ++j) at(0, j) = static_cast<int64_t>(j);
  for (size_t i = 1; i <= R; ++i) {
    for (size_t j = 1; j <= H; ++j) {
      int64_t sub = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      int64_t del = at(i - 1, j) + 1;
      int64_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min({sub, del, ins});
    }
  }

  EditStats stats;
  stats.ref_len = static_cast<int64_t>(R);
  size_t i = R, j = H;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        at(i, j) == at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1)) {
      if (ref[i - 1] != hyp[j - 1]) ++stats.substitutions;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ++stats.deletions;
      --i;
    } else {
      ++stats.insertions;
      --j;
    }
  }
  return stats;
}

double per_percent(const PhoneSet& ps, const std::vector<LabelSequence>& refs,
                   const std::vector<LabelSequence>& hyps, bool strip,
                   EditStats* pooled) {
  require(refs.size() == hyps.size(), ErrorCode::kInvalidArg,
          "reference and hypothesis lists differ in length (" +
              std::to_string(refs.size()) + " vs " +
              std::to_string(hyps.size()) + ")");
  EditStats total;
  for (size_t u = 0; u < refs.size(); ++u) {
    if (strip) {
      LabelSequence r = strip_landmarks(ps, refs[u]);
      LabelSequence h = strip_landmarks(ps, hyps[u]);
      total += edit_distance(r.symbols, h.symbols);
    } else {
      total += edit_distance(refs[u].symbols, hyps[u].symbols);
    }
  }
  require(total.ref_len > 0, ErrorCode::kInvalidArg,
          "undefined rate: total reference length is zero");
  if (pooled) *pooled = total;
  return 100.0 * static_cast<double>(total.distance()) /
         static_cast<double>(total.ref_len);
}

}  // namespace ctclm
