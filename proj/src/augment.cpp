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

#include "augment.hpp"

namespace ctclm {

namespace {

void check_phones_only(const PhoneSet& ps, const LabelSequence& phones) {
  require(phones.kind == LabelKind::kPhonesOnly, ErrorCode::kInvalidArg,
          "augmentation input must be a phone-only sequence");
  require(!phones.empty(), ErrorCode::kInvalidArg,
          "augmentation input must be non-empty");
  for (size_t i = 0; i < phones.symbols.size(); ++i) {
    if (!ps.is_phone(phones.symbols[i])) {
      fail(ErrorCode::kState,
           "position " + std::to_string(i + 1) + ": symbol id " +
               std::to_string(phones.symbols[i]) + " is not a phone");
    }
  }
}

LabelSequence augment(const PhoneSet& ps, const LabelSequence& phones,
                      bool every_boundary) {
  check_phones_only(ps, phones);
  LabelSequence out;
  out.kind = every_boundary ? LabelKind::kMixed2 : LabelKind::kMixed1;
  out.symbols.reserve(2 * phones.symbols.size());
  for (size_t i = 0; i < phones.symbols.size(); ++i) {
    if (i > 0) {
      MannerClass prev = ps.classify(phones.symbols[i - 1]);
      MannerClass curr = ps.classify(phones.symbols[i]);
      if (every_boundary || prev != curr) {
        out.symbols.push_back(ps.landmark_id(prev, curr));
      }
    }
    out.symbols.push_back(phones.symbols[i]);
  }
  return out;
}

}  // namespace

LabelSequence augment_mixed1(const PhoneSet& ps, const LabelSequence& phones) {
  return augment(ps, phones, /*every_boundary=*/false);
}

LabelSequence augment_mixed2(const PhoneSet& ps, const LabelSequence& phones) {
  return augment(ps, phones, /*every_boundary=*/true);
}

LabelSequence strip_landmarks(const PhoneSet& ps, const LabelSequence& seq) {
  LabelSequence out;
  out.kind = LabelKind::kPhonesOnly;
  out.symbols.reserve(seq.symbols.size());
  for (SymbolId id : seq.symbols) {
    if (!ps.is_landmark(id)) out.symbols.push_back(id);
  }
  return out;
}

}  // namespace ctclm
