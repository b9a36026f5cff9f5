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
#include <string>
#include <vector>

#include "labels.hpp"
#include "matrix.hpp"
#include "phoneset.hpp"

namespace ctclm {

struct Utterance {
  std::string id;
  Matrix feats;               // T x D
  LabelSequence transcript;   // phones only, non-empty
  std::vector<int> alignment; // per-frame phone id; empty when unknown
};

struct Corpus {
  std::vector<Utterance> utts;
  int feature_dim = 0;

  size_t size() const { return utts.size(); }
  bool empty() const { return utts.empty(); }
};

enum class LabelModeId { kBaseline = 0, kMixed1 = 1, kMixed2 = 2 };

const char* label_mode_name(LabelModeId mode);
LabelModeId label_mode_from_name(std::string_view name);

// Target sequence for an utterance under the given label mode.
LabelSequence targets_for_mode(const PhoneSet& ps, const LabelSequence& phones,
                               LabelModeId mode);

struct LoadIssue {
  std::string utt_id;   // may be empty when the id itself was unreadable
  std::string message;
};

struct InfeasibleFlag {
  std::string utt_id;
  LabelModeId mode;
};

struct LoadReport {
  std::vector<LoadIssue> errors;          // utterances excluded from the corpus
  std::vector<InfeasibleFlag> infeasible; // kept, but unusable for that mode
};

// Loads a JSON-lines manifest: one object per utterance with fields "id",
// "features" (path, resolved relative to the manifest) and "transcript"
// (space-separated phone names); an optional "alignment" field carries
// run-length pairs "phone:frames". Utterances with unreadable features,
// dimension mismatches or unknown phones are reported and skipped;
// transcripts that cannot fit their frame count under some label mode are
// flagged. An unreadable manifest throws.
Corpus load_corpus(const PhoneSet& ps, const std::string& manifest_path,
                   LoadReport* report);

// Writes manifest.jsonl + feats/<id>.bin (+ transcripts.txt) under dir.
void write_corpus(const PhoneSet& ps, const Corpus& corpus,
                  const std::string& dir);

// Deterministic subsample without replacement: floor(n * fraction)
// utterances, original order preserved. Errors when the result is empty.
Corpus subset(const Corpus& corpus, double fraction, uint64_t seed);

}  // namespace ctclm
