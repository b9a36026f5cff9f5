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

#include "phoneset.hpp"

namespace ctclm {

namespace {

// 61-phone TIMIT inventory with sonorant/continuant feature bits.
// Closures and silence marks are [-sonorant, -continuant]; stop releases,
// affricates and fricatives are [-sonorant, +continuant]; nasals are
// [+sonorant, -continuant]; vowels, glides, liquids and flaps are
// [+sonorant, +continuant]. Copies of this text live in data/phonesets/; a
// unit test keeps them in sync.
constexpr const char* kTimit61 =
    "# TIMIT 61-phone inventory.\n"
    "# phone<TAB>sonorant<TAB>continuant\n"
    "merged: false\n"
    "bcl\t-\t-\n"
    "dcl\t-\t-\n"
    "gcl\t-\t-\n"
    "kcl\t-\t-\n"
    "pcl\t-\t-\n"
    "q\t-\t-\n"
    "tcl\t-\t-\n"
    "epi\t-\t-\n"
    "h#\t-\t-\n"
    "pau\t-\t-\n"
    "em\t+\t-\n"
    "en\t+\t-\n"
    "eng\t+\t-\n"
    "m\t+\t-\n"
    "n\t+\t-\n"
    "ng\t+\t-\n"
    "b\t-\t+\n"
    "d\t-\t+\n"
    "g\t-\t+\n"
    "k\t-\t+\n"
    "p\t-\t+\n"
    "t\t-\t+\n"
    "ch\t-\t+\n"
    "jh\t-\t+\n"
    "dh\t-\t+\n"
    "f\t-\t+\n"
    "hh\t-\t+\n"
    "hv\t-\t+\n"
    "s\t-\t+\n"
    "sh\t-\t+\n"
    "th\t-\t+\n"
    "v\t-\t+\n"
    "z\t-\t+\n"
    "zh\t-\t+\n"
    "aa\t+\t+\n"
    "ae\t+\t+\n"
    "ah\t+\t+\n"
    "ao\t+\t+\n"
    "aw\t+\t+\n"
    "ax\t+\t+\n"
    "ax-h\t+\t+\n"
    "axr\t+\t+\n"
    "ay\t+\t+\n"
    "dx\t+\t+\n"
    "eh\t+\t+\n"
    "el\t+\t+\n"
    "ey\t+\t+\n"
    "ih\t+\t+\n"
    "ix\t+\t+\n"
    "iy\t+\t+\n"
    "l\t+\t+\n"
    "nx\t+\t+\n"
    "ow\t+\t+\n"
    "oy\t+\t+\n"
    "r\t+\t+\n"
    "uh\t+\t+\n"
    "uw\t+\t+\n"
    "ux\t+\t+\n"
    "w\t+\t+\n"
    "y\t+\t+\n"
    "er\t+\t+\n";

// 39-phone CMU-dictionary inventory. The merged header collapses the two
// -sonorant cells into a single obstruent class (the set has no separate
// closure symbols, so the closure/release split is unobservable).
constexpr const char* kCmu39 =
    "# CMU-dictionary 39-phone inventory, merged -sonorant classes.\n"
    "# phone<TAB>sonorant<TAB>continuant\n"
    "merged: true\n"
    "b\t-\t-\n"
    "d\t-\t-\n"
    "g\t-\t-\n"
    "k\t-\t-\n"
    "p\t-\t-\n"
    "t\t-\t-\n"
    "ch\t-\t-\n"
    "jh\t-\t-\n"
    "dh\t-\t+\n"
    "f\t-\t+\n"
    "hh\t-\t+\n"
    "s\t-\t+\n"
    "sh\t-\t+\n"
    "th\t-\t+\n"
    "v\t-\t+\n"
    "z\t-\t+\n"
    "zh\t-\t+\n"
    "m\t+\t-\n"
    "n\t+\t-\n"
    "ng\t+\t-\n"
    "l\t+\t+\n"
    "r\t+\t+\n"
    "w\t+\t+\n"
    "y\t+\t+\n"
    "er\t+\t+\n"
    "aa\t+\t+\n"
    "ae\t+\t+\n"
    "ah\t+\t+\n"
    "ao\t+\t+\n"
    "aw\t+\t+\n"
    "ay\t+\t+\n"
    "eh\t+\t+\n"
    "ey\t+\t+\n"
    "ih\t+\t+\n"
    "iy\t+\t+\n"
    "ow\t+\t+\n"
    "oy\t+\t+\n"
    "uh\t+\t+\n"
    "uw\t+\t+\n";

// Small inventory for synthetic-corpus experiments: two phones per manner
// class so every landmark type can occur.
constexpr const char* kSynth8 =
    "# Eight phones spanning the four manner classes.\n"
    "# phone<TAB>sonorant<TAB>continuant\n"
    "merged: false\n"
    "bcl\t-\t-\n"
    "dcl\t-\t-\n"
    "m\t+\t-\n"
    "n\t+\t-\n"
    "s\t-\t+\n"
    "f\t-\t+\n"
    "aa\t+\t+\n"
    "iy\t+\t+\n";

}  // namespace

const std::vector<std::string>& phoneset_preset_names() {
  static const std::vector<std::string> names = {"timit61", "cmu39", "synth8"};
  return names;
}

bool is_phoneset_preset(std::string_view name) {
  for (const auto& n : phoneset_preset_names()) {
    if (n == name) return true;
  }
  return false;
}

std::string_view phoneset_preset_text(std::string_view name) {
  if (name == "timit61") return kTimit61;
  if (name == "cmu39") return kCmu39;
  if (name == "synth8") return kSynth8;
  fail(ErrorCode::kInvalidArg,
       "unknown phone-set preset '" + std::string(name) +
           "' (available: timit61, cmu39, synth8)");
}

}  // namespace ctclm
