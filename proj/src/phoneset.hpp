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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace ctclm {

// The two binary distinctive features that drive the manner classification.
struct DistinctiveFeatures {
  bool sonorant = false;
  bool continuant = false;

  friend bool operator==(const DistinctiveFeatures&,
                         const DistinctiveFeatures&) = default;
};

// Broad manner-of-articulation classes. Enumeration order is continuant
// first, sonorant second; landmark vocabulary order depends on it.
enum class MannerClass {
  kClosure = 0,       // -continuant, -sonorant
  kNasal = 1,         // -continuant, +sonorant
  kObstruent = 2,     // +continuant, -sonorant
  kSonorantCont = 3,  // +continuant, +sonorant
};

// Maps features to the manner class. Under the merged scheme both
// -sonorant cells collapse into kObstruent, giving a three-way split.
MannerClass manner_of(DistinctiveFeatures f, bool merged);

// Three-letter class tag used in the landmark wire format: CLO NAS OBS SON.
const char* manner_tag(MannerClass c);

// A landmark is an ordered pair of manner classes: the class before and the
// class after a phone boundary. Same-class pairs are legal symbols.
struct LandmarkLabel {
  MannerClass from = MannerClass::kClosure;
  MannerClass to = MannerClass::kClosure;

  friend bool operator==(const LandmarkLabel&, const LandmarkLabel&) = default;
};

// Serialized landmark token, e.g. "<L:OBS>SON>". This text form is a stable
// wire format: transcripts written by one build parse in any other.
std::string landmark_token(MannerClass from, MannerClass to);
std::optional<LandmarkLabel> parse_landmark_token(std::string_view token);

using SymbolId = int;

// Immutable phone inventory plus the landmark vocabulary derived from it.
//
// Vocabulary layout (fixed, a pure function of the config text):
//   [0, P)        phones, in file order
//   [P, P+L)      landmarks, ordered by (from, to) class pair
//   P+L           blank (mixed-vocabulary head)
// The phone-only head uses indices [0, P) plus blank at P. The blank symbol
// is reserved by the engine and never appears in config files or label
// sequences.
class PhoneSet {
 public:
  // Parses the phone-set text format: one record per line,
  // "phone<TAB>sonorant_bit<TAB>continuant_bit" with bits in {+,-}; '#'
  // starts a comment; an optional header "merged: true|false" selects the
  // three-way class scheme (default false).
  static PhoneSet parse(std::string_view text,
                        const std::string& origin = "<string>");
  static PhoneSet load(const std::string& path);
  // Resolves a bundled preset name ("timit61", "cmu39", "synth8") or, when
  // no preset matches, a filesystem path.
  static PhoneSet open(const std::string& path_or_preset);

  int num_phones() const { return static_cast<int>(phones_.size()); }
  int num_classes() const { return merged_ ? 3 : 4; }
  int num_landmarks() const { return num_classes() * num_classes(); }
  bool merged() const { return merged_; }

  bool has_phone(std::string_view name) const;
  SymbolId phone_id(std::string_view name) const;  // throws on unknown phone
  const std::string& phone_name(SymbolId id) const;
  DistinctiveFeatures features(SymbolId id) const;

  MannerClass classify(SymbolId phone) const;
  MannerClass classify(std::string_view phone) const;

  // Deterministic, injective on ordered class pairs within the scheme.
  SymbolId landmark_id(MannerClass from, MannerClass to) const;
  LandmarkLabel landmark(SymbolId id) const;

  bool is_phone(SymbolId id) const { return id >= 0 && id < num_phones(); }
  bool is_landmark(SymbolId id) const {
    return id >= num_phones() && id < num_phones() + num_landmarks();
  }

  int mixed_vocab_size() const { return num_phones() + num_landmarks() + 1; }
  int phone_vocab_size() const { return num_phones() + 1; }
  SymbolId mixed_blank() const { return num_phones() + num_landmarks(); }
  SymbolId phone_blank() const { return num_phones(); }

  // Phone name, landmark token, or "<blank>" for either blank index.
  std::string symbol_name(SymbolId id) const;
  // Phone name or landmark token -> id; nullopt when unknown.
  std::optional<SymbolId> find_symbol(std::string_view token) const;

  const std::vector<std::string>& phones() const { return phones_; }

  // The scheme's classes in vocabulary order.
  std::vector<MannerClass> scheme_classes() const;

  // Canonical config text; reproduces an identical PhoneSet when parsed.
  std::string to_config_text() const;

  friend bool operator==(const PhoneSet&, const PhoneSet&) = default;

 private:
  int scheme_index(MannerClass c) const;

  std::vector<std::string> phones_;
  std::vector<DistinctiveFeatures> features_;
  std::map<std::string, SymbolId, std::less<>> index_;
  bool merged_ = false;
};

// Bundled preset registry.
const std::vector<std::string>& phoneset_preset_names();
bool is_phoneset_preset(std::string_view name);
std::string_view phoneset_preset_text(std::string_view name);

}  // namespace ctclm
