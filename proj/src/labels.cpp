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

#include "labels.hpp"

#include "strings.hpp"

namespace ctclm {

LabelSequence parse_phone_transcript(const PhoneSet& ps,
                                     std::string_view line) {
  LabelSequence seq;
  seq.kind = LabelKind::kPhonesOnly;
  int pos = 0;
  for (const std::string& token : split_ws(line)) {
    ++pos;
    if (!ps.has_phone(token)) {
      fail(ErrorCode::kState, "position " + std::to_string(pos) +
                                  ": unknown phone '" + token + "'");
    }
    seq.symbols.push_back(ps.phone_id(token));
  }
  return seq;
}

LabelSequence parse_symbols(const PhoneSet& ps, std::string_view line) {
  LabelSequence seq;
  bool any_landmark = false;
  int pos = 0;
  for (const std::string& token : split_ws(line)) {
    ++pos;
    auto id = ps.find_symbol(token);
    if (!id) {
      fail(ErrorCode::kState, "position " + std::to_string(pos) +
                                  ": unknown symbol '" + token + "'");
    }
    any_landmark = any_landmark || ps.is_landmark(*id);
    seq.symbols.push_back(*id);
  }
  seq.kind = any_landmark ? LabelKind::kMixed2 : LabelKind::kPhonesOnly;
  return seq;
}

std::string format_labels(const PhoneSet& ps, const LabelSequence& seq) {
  std::string out;
  for (size_t i = 0; i < seq.symbols.size(); ++i) {
    if (i) out += ' ';
    out += ps.symbol_name(seq.symbols[i]);
  }
  return out;
}

}  // namespace ctclm
