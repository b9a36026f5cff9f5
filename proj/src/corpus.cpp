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

#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

#include "augment.hpp"
#include "ctc.hpp"
#include "featio.hpp"
#include "rng.hpp"
#include "strings.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ctclm {

const char* label_mode_name(LabelModeId mode) {
  switch (mode) {
    case LabelModeId::kBaseline:
      return "baseline";
    case LabelModeId::kMixed1:
      return "mixed1";
    case LabelModeId::kMixed2:
      return "mixed2";
  }
  return "?";
}

LabelModeId label_mode_from_name(std::string_view name) {
  if (name == "baseline") return LabelModeId::kBaseline;
  if (name == "mixed1") return LabelModeId::kMixed1;
  if (name == "mixed2") return LabelModeId::kMixed2;
  fail(ErrorCode::kInvalidArg,
       "unknown label mode '" + std::string(name) +
           "' (expected baseline, mixed1 or mixed2)");
}

LabelSequence targets_for_mode(const PhoneSet& ps, const LabelSequence& phones,
                               LabelModeId mode) {
  switch (mode) {
    case LabelModeId::kBaseline:
      return phones;
    case LabelModeId::kMixed1:
      return augment_mixed1(ps, phones);
    case LabelModeId::kMixed2:
      return augment_mixed2(ps, phones);
  }
  fail(ErrorCode::kInternal, "bad label mode");
}

namespace {

std::vector<int> parse_alignment_rle(const PhoneSet& ps, std::string_view text,
                                     const LabelSequence& transcript, int frames) {
  std::vector<int> alignment;
  std::vector<int> collapsed;
  for (const std::string& pair : split_ws(text)) {
    size_t colon = pair.rfind(':');
    require(colon != std::string::npos, ErrorCode::kParse,
            "bad alignment pair '" + pair + "' (expected phone:frames)");
    std::string phone = pair.substr(0, colon);
    int count = 0;
    try {
      count = std::stoi(pair.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad alignment count in '" + pair + "'");
    }
    require(count > 0, ErrorCode::kParse,
            "non-positive alignment count in '" + pair + "'");
    int id = ps.phone_id(phone);
    alignment.insert(alignment.end(), static_cast<size_t>(count), id);
    collapsed.push_back(id);
  }
  require(static_cast<int>(alignment.size()) == frames, ErrorCode::kParse,
          "alignment covers " + std::to_string(alignment.size()) +
              " frames, features have " + std::to_string(frames));
  require(collapsed == transcript.symbols, ErrorCode::kParse,
          "alignment does not collapse to the transcript");
  return alignment;
}

std::string alignment_to_rle(const PhoneSet& ps,
                             const std::vector<int>& alignment) {
  std::string out;
  size_t i = 0;
  while (i < alignment.size()) {
    size_t j = i;
    while (j < alignment.size() && alignment[j] == alignment[i]) ++j;
    if (!out.empty()) out += ' ';
    out += ps.phone_name(alignment[i]);
    out += ':';
    out += std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Corpus load_corpus(const PhoneSet& ps, const std::string& manifest_path,
                   LoadReport* report) {
  std::ifstream in(manifest_path, std::ios::binary);
  require(in.good(), ErrorCode::kIo,
          "cannot open manifest: " + manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();

  Corpus corpus;
  LoadReport local;
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::string id;
    try {
      json obj = json::parse(line);
      require(obj.is_object(), ErrorCode::kParse, "manifest line is not an object");
      require(obj.contains("id") && obj["id"].is_string(), ErrorCode::kParse,
              "missing string field 'id'");
      id = obj["id"].get<std::string>();
      require(obj.contains("features") && obj["features"].is_string(),
              ErrorCode::kParse, "missing string field 'features'");
      require(obj.contains("transcript") && obj["transcript"].is_string(),
              ErrorCode::kParse, "missing string field 'transcript'");
      require(seen_ids.insert(id).second, ErrorCode::kParse,
              "duplicate utterance id");

      Utterance utt;
      utt.id = id;
      fs::path feat_path = obj["features"].get<std::string>();
      if (feat_path.is_relative()) feat_path = base / feat_path;
      utt.feats = read_feature_file(feat_path.string());
      if (corpus.feature_dim == 0) corpus.feature_dim = utt.feats.cols();
      require(utt.feats.cols() == corpus.feature_dim, ErrorCode::kParse,
              "feature dimension " + std::to_string(utt.feats.cols()) +
                  " does not match corpus dimension " +
                  std::to_string(corpus.feature_dim));
      utt.transcript =
          parse_phone_transcript(ps, obj["transcript"].get<std::string>());
      require(!utt.transcript.empty(), ErrorCode::kParse, "empty transcript");
      if (obj.contains("alignment")) {
        utt.alignment =
            parse_alignment_rle(ps, obj["alignment"].get<std::string>(),
                                utt.transcript, utt.feats.rows());
      }

      for (LabelModeId mode : {LabelModeId::kBaseline, LabelModeId::kMixed1,
                               LabelModeId::kMixed2}) {
        LabelSequence target = targets_for_mode(ps, utt.transcript, mode);
        if (ctc_required_frames(target.symbols) > utt.feats.rows()) {
          local.infeasible.push_back({id, mode});
        }
      }
      corpus.utts.push_back(std::move(utt));
    } catch (const std::exception& e) {
      local.errors.push_back(
          {id, manifest_path + ":" + std::to_string(line_no) + ": " +
                   e.what()});
    }
  }
  if (report) *report = std::move(local);
  return corpus;
}

void write_corpus(const PhoneSet& ps, const Corpus& corpus,
                  const std::string& dir) {
  fs::create_directories(fs::path(dir) / "feats");
  std::ofstream manifest(fs::path(dir) / "manifest.jsonl", std::ios::binary);
  std::ofstream transcripts(fs::path(dir) / "transcripts.txt",
                            std::ios::binary);
  require(manifest.good() && transcripts.good(), ErrorCode::kIo,
          "cannot write corpus under " + dir);
  for (const Utterance& utt : corpus.utts) {
    std::string rel = "feats/" + utt.id + ".bin";
    write_feature_file((fs::path(dir) / rel).string(), utt.feats);
    json obj;
    obj["id"] = utt.id;
    obj["features"] = rel;
    obj["transcript"] = format_labels(ps, utt.transcript);
    if (!utt.alignment.empty()) {
      obj["alignment"] = alignment_to_rle(ps, utt.alignment);
    }
    manifest << obj.dump() << '\n';
    transcripts << format_labels(ps, utt.transcript) << '\n';
  }
  require(manifest.good() && transcripts.good(), ErrorCode::kIo,
          "write failed under " + dir);
}

Corpus subset(const Corpus& corpus, double fraction, uint64_t seed) {
  require(fraction > 0.0 && fraction <= 1.0, ErrorCode::kInvalidArg,
          "fraction must be in (0, 1]");
  size_t n = corpus.size();
  auto count = static_cast<size_t>(fraction * static_cast<double>(n));
  require(count > 0, ErrorCode::kInvalidArg,
          "fraction " + std::to_string(fraction) + " of " + std::to_string(n) +
              " utterances selects none");
  std::vector<size_t> indices(n);
  for (size_t i = 0; i < n; ++i) indices[i] = i;
  Rng rng(seed);
  rng.shuffle(indices);
  indices.resize(count);
  std::sort(indices.begin(), indices.end());
  Corpus out;
  out.feature_dim = corpus.feature_dim;
  out.utts.reserve(count);
  for (size_t i : indices) out.utts.push_back(corpus.utts[i]);
  return out;
}

}  // namespace ctclm
