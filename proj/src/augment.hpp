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

#include "labels.hpp"
#include "phoneset.hpp"

namespace ctclm {

// Inserts a landmark between consecutive phones only where the manner class
// changes. The phone subsequence is unchanged; landmarks never appear at the
// sequence edges or adjacent to each other.
LabelSequence augment_mixed1(const PhoneSet& ps, const LabelSequence& phones);

// Inserts a landmark at every phone boundary, including boundaries where the
// manner class stays the same (and between repeated identical phones).
// Result length is 2n-1 for n phones.
LabelSequence augment_mixed2(const PhoneSet& ps, const LabelSequence& phones);

// Removes every landmark symbol; phone order is preserved. Identity on
// phone-only input. Works on any sequence, including decoder hypotheses.
LabelSequence strip_landmarks(const PhoneSet& ps, const LabelSequence& seq);

}  // namespace ctclm
