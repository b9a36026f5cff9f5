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

#include <fstream>
#include <sstream>

#include "strings.hpp"

namespace ctclm {

MannerClass manner_of(DistinctiveFeatures f, bool merged) {
  if (merged && !f.sonorant) return MannerClass::kObstruent;
  int idx = (f.continuant ? 2 : 0) + (f.sonorant ? 1 : 0);
  return static_cast<MannerClass>(idx);
}

const char* manner_tag(MannerClass c) {
  switch (c) {
    case MannerClass::kClosure:
      return "CLO";
    case MannerClass::kNasal:
      return "NAS";
    case MannerClass::kObstruent:
      return "OBS";
    case MannerClass::kSonorantCont:
      return "SON";
  }
  return "???";
}

std::string landmark_token(MannerClass from, MannerClass to) {
  std::string out = "<L:";
  out += manner_tag(from);
  out += '>';
  out += manner_tag(to);
  out += '>';
  return out;
}

static std::optional<MannerClass> tag_to_class(std::string_view tag) {
  if (tag == "CLO") return MannerClass::kClosure;
  if (tag == "NAS") return MannerClass::kNasal;
  if (tag == "OBS") return MannerClass::kObstruent;
  if (tag == "SON") return MannerClass::kSonorantCont;
  return std::nullopt;
}

std::optional<LandmarkLabel> parse_landmark_token(std::string_view token) {
  // "<L:XXX>YYY>"
  if (token.size() != 11 || token.substr(0, 3) != "<L:" || token[6] != '>' ||
      token[10] != '>') {
    return std::nullopt;
  }
  auto from = tag_to_class(token.substr(3, 3));
  auto to = tag_to_class(token.substr(7, 3));
  if (!from || !to) return std::nullopt;
  return LandmarkLabel{*from, *to};
}

namespace {

bool parse_bit(std::string_view s, bool* out) {
  if (s == "+") {
    *out = true;
    return true;
  }
  if (s == "-") {
    *out = false;
    return true;
  }
  return false;
}

[[noreturn]] void parse_fail(const std::string& origin, int line_no,
                             const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line_no << ": " << msg;
  fail(ErrorCode::kParse, os.str());
}

}  // namespace

PhoneSet PhoneSet::parse(std::string_view text, const std::string& origin) {
  PhoneSet ps;
  bool merged_seen = false;
  int line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("merged:", 0) == 0) {
      if (merged_seen) parse_fail(origin, line_no, "duplicate 'merged:' header");
      std::string_view value = trim(line.substr(7));
      if (value == "true") {
        ps.merged_ = true;
      } else if (value == "false") {
        ps.merged_ = false;
      } else {
        parse_fail(origin, line_no,
                   "bad value for 'merged:' (expected true or false): '" +
                       std::string(value) + "'");
      }
      merged_seen = true;
      continue;
    }
    std::vector<std::string> fields = split_ws(line);
    if (fields.size() != 3) {
      parse_fail(origin, line_no,
                 "expected 'phone<TAB>sonorant_bit<TAB>continuant_bit', got " +
                     std::to_string(fields.size()) + " field(s)");
    }
    const std::string& name = fields[0];
    if (name[0] == '<') {
      parse_fail(origin, line_no,
                 "reserved symbol name '" + name +
                     "' (names starting with '<' belong to the engine)");
    }
    if (ps.index_.count(name)) {
      parse_fail(origin, line_no, "duplicate phone '" + name + "'");
    }
    DistinctiveFeatures f;
    if (!parse_bit(fields[1], &f.sonorant)) {
      parse_fail(origin, line_no,
                 "bad sonorant bit '" + fields[1] + "' for phone '" + name +
                     "' (expected + or -)");
    }
    if (!parse_bit(fields[2], &f.continuant)) {
      parse_fail(origin, line_no,
                 "bad continuant bit '" + fields[2] + "' for phone '" + name +
                     "' (expected + or -)");
    }
    ps.index_.emplace(name, static_cast<SymbolId>(ps.phones_.size()));
    ps.phones_.push_back(name);
    ps.features_.push_back(f);
  }
  if (ps.phones_.empty()) {
    fail(ErrorCode::kParse, origin + ": empty inventory");
  }
  return ps;
}

PhoneSet PhoneSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::kIo, "cannot open phone-set file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str(), path);
}

PhoneSet PhoneSet::open(const std::string& path_or_preset) {
  if (is_phoneset_preset(path_or_preset)) {
    return parse(phoneset_preset_text(path_or_preset),
                 "<preset:" + path_or_preset + ">");
  }
  return load(path_or_preset);
}

bool PhoneSet::has_phone(std::string_view name) const {
  return index_.find(name) != index_.end();
}

SymbolId PhoneSet::phone_id(std::string_view name) const {
  auto it = index_.find(name);
  require(it != index_.end(), ErrorCode::kState,
          "unknown phone '" + std::string(name) + "'");
  return it->second;
}

const std::string& PhoneSet::phone_name(SymbolId id) const {
  require(is_phone(id), ErrorCode::kState,
          "phone id out of range: " + std::to_string(id));
  return phones_[static_cast<size_t>(id)];
}

DistinctiveFeatures PhoneSet::features(SymbolId id) const {
  require(is_phone(id), ErrorCode::kState,
          "phone id out of range: " + std::to_string(id));
  return features_[static_cast<size_t>(id)];
}

MannerClass PhoneSet::classify(SymbolId phone) const {
  return manner_of(features(phone), merged_);
}

MannerClass PhoneSet::classify(std::string_view phone) const {
  return classify(phone_id(phone));
}

std::vector<MannerClass> PhoneSet::scheme_classes() const {
  if (merged_) {
    return {MannerClass::kNasal, MannerClass::kObstruent,
            MannerClass::kSonorantCont};
  }
  return {MannerClass::kClosure, MannerClass::kNasal, MannerClass::kObstruent,
          MannerClass::kSonorantCont};
}

int PhoneSet::scheme_index(MannerClass c) const {
  if (!merged_) return static_cast<int>(c);
  switch (c) {
    case MannerClass::kNasal:
      return 0;
    case MannerClass::kObstruent:
      return 1;
    case MannerClass::kSonorantCont:
      return 2;
    case MannerClass::kClosure:
      break;
  }
  fail(ErrorCode::kInvalidArg,
       "manner class CLO does not exist in the merged scheme");
}

SymbolId PhoneSet::landmark_id(MannerClass from, MannerClass to) const {
  int c = num_classes();
  return num_phones() + scheme_index(from) * c + scheme_index(to);
}

LandmarkLabel PhoneSet::landmark(SymbolId id) const {
  require(is_landmark(id), ErrorCode::kState,
          "landmark id out of range: " + std::to_string(id));
  int pair = id - num_phones();
  auto classes = scheme_classes();
  int c = num_classes();
  return LandmarkLabel{classes[static_cast<size_t>(pair / c)],
                       classes[static_cast<size_t>(pair % c)]};
}

std::string PhoneSet::symbol_name(SymbolId id) const {
  if (is_phone(id)) return phones_[static_cast<size_t>(id)];
  if (is_landmark(id)) {
    LandmarkLabel lm = landmark(id);
    return landmark_token(lm.from, lm.to);
  }
  if (id == mixed_blank() || id == phone_blank()) return "<blank>";
  fail(ErrorCode::kState, "symbol id out of range: " + std::to_string(id));
}

std::optional<SymbolId> PhoneSet::find_symbol(std::string_view token) const {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  if (auto lm = parse_landmark_token(token)) {
    if (merged_ && (lm->from == MannerClass::kClosure ||
                    lm->to == MannerClass::kClosure)) {
      return std::nullopt;
    }
    return landmark_id(lm->from, lm->to);
  }
  return std::nullopt;
}

std::string PhoneSet::to_config_text() const {
  std::string out;
  out += "merged: ";
  out += merged_ ? "true" : "false";
  out += '\n';
  for (int i = 0; i < num_phones(); ++i) {
    out += phones_[static_cast<size_t>(i)];
    out += '\t';
    out += features_[static_cast<size_t>(i)].sonorant ? '+' : '-';
    out += '\t';
    out += features_[static_cast<size_t>(i)].continuant ? '+' : '-';
    out += '\n';
  }
  return out;
}

}  // namespace ctclm
