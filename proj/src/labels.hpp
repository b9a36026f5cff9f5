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

#include <string>
#include <string_view>
#include <vector>

#include "phoneset.hpp"

namespace ctclm {

// How a sequence was built. Advisory provenance: kPhonesOnly sequences carry
// no landmark symbols; kMixed1/kMixed2 are augmentation outputs. Sequences
// never contain blank.
enum class LabelKind {
  kPhonesOnly = 0,
  kMixed1 = 1,
  kMixed2 = 2,
};

struct LabelSequence {
  std::vector<SymbolId> symbols;
  LabelKind kind = LabelKind::kPhonesOnly;

  size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

// Parses a space-separated phone transcript. Errors name the position and
// the offending token.
LabelSequence parse_phone_transcript(const PhoneSet& ps, std::string_view line);

// Parses a transcript that may contain landmark tokens alongside phones.
LabelSequence parse_symbols(const PhoneSet& ps, std::string_view line);

std::string format_labels(const PhoneSet& ps, const LabelSequence& seq);

}  // namespace ctclm
