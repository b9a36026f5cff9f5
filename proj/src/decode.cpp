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

#include "decode.hpp"

#include <algorithm>
#include <map>

#include "ctc.hpp"
#include "logmath.hpp"

namespace ctclm {

Hypothesis greedy_decode(const Matrix& lp) {
  validate_log_prob_matrix(lp);
  Hypothesis hyp;
  if (lp.rows() == 0) return hyp;
  const int blank = lp.cols() - 1;
  std::vector<int> path(static_cast<size_t>(lp.rows()));
  for (int t = 0; t < lp.rows(); ++t) {
    int best = 0;
    for (int v = 1; v < lp.cols(); ++v) {
      if (lp.at(t, v) > lp.at(t, best)) best = v;
    }
    path[static_cast<size_t>(t)] = best;
    hyp.score += clamp_log(lp.at(t, best));
  }
  hyp.labels = collapse(path, blank);
  return hyp;
}

namespace {

struct PrefixMass {
  double blank_end = kLogZero;     // mass of paths ending in blank
  double label_end = kLogZero;     // mass of paths ending in the last label

  double total() const { return log_add(blank_end, label_end); }
};

using BeamMap = std::map<std::vector<int>, PrefixMass>;

void prune(BeamMap& beams, size_t beam_width) {
  if (beams.size() <= beam_width) return;
  std::vector<std::pair<double, const std::vector<int>*>> order;
  order.reserve(beams.size());
  for (const auto& [prefix, mass] : beams) {
    order.emplace_back(mass.total(), &prefix);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return *a.second < *b.second;  // lexicographic tie-break
            });
  BeamMap kept;
  for (size_t i = 0; i < beam_width; ++i) {
    kept.emplace(*order[i].second, beams.at(*order[i].second));
  }
  beams = std::move(kept);
}

}  // namespace

std::vector<Hypothesis> prefix_beam_decode(const Matrix& lp, int beam,
                                           int nbest) {
  validate_log_prob_matrix(lp);
  require(nbest >= 1, ErrorCode::kInvalidArg, "nbest must be >= 1");
  require(beam >= nbest, ErrorCode::kInvalidArg,
          "beam width must be >= nbest");

  const int blank = lp.cols() - 1;
  BeamMap beams;
  beams[{}] = PrefixMass{0.0, kLogZero};  // empty prefix, probability one

  for (int t = 0; t < lp.rows(); ++t) {
    BeamMap next;
    for (const auto& [prefix, mass] : beams) {
      double total = mass.total();
      // Emit blank: the prefix is unchanged and now ends in blank.
      {
        PrefixMass& out = next[prefix];
        out.blank_end = log_add(out.blank_end,
                                total + clamp_log(lp.at(t, blank)));
      }
      for (int c = 0; c < blank; ++c) {
        double lpc = clamp_log(lp.at(t, c));
        if (!prefix.empty() && prefix.back() == c) {
          // Repeating the trailing label without an intervening blank
          // extends the same emission: the prefix does not grow.
          {
            PrefixMass& out = next[prefix];
            out.label_end = log_add(out.label_end, mass.label_end + lpc);
          }
          // Growing the prefix with the same label needs a blank-ending
          // path before it.
          std::vector<int> grown = prefix;
          grown.push_back(c);
          PrefixMass& out = next[grown];
          out.label_end = log_add(out.label_end, mass.blank_end + lpc);
        } else {
          std::vector<int> grown = prefix;
          grown.push_back(c);
          PrefixMass& out = next[grown];
          out.label_end = log_add(out.label_end, total + lpc);
        }
      }
    }
    prune(next, static_cast<size_t>(beam));
    beams = std::move(next);
  }

  std::vector<Hypothesis> hyps;
  hyps.reserve(beams.size());
  for (const auto& [prefix, mass] : beams) {
    hyps.push_back(Hypothesis{prefix, mass.total()});
  }
  std::sort(hyps.begin(), hyps.end(), [](const Hypothesis& a,
                                         const Hypothesis& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.labels < b.labels;
  });
  if (hyps.size() > static_cast<size_t>(nbest)) {
    hyps.resize(static_cast<size_t>(nbest));
  }
  return hyps;
}

}  // namespace ctclm
