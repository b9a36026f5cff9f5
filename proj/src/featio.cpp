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

#include "featio.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "strings.hpp"

static_assert(std::endian::native == std::endian::little,
              "feature container i/o assumes a little-endian host");

namespace ctclm {

namespace {

constexpr char kMagic[4] = {'C', 'T', 'F', 'B'};
constexpr uint32_t kVersion = 1;

bool has_csv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

void write_csv(const std::string& path, const Matrix& feats) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::kIo, "cannot write feature file: " + path);
  out.precision(17);
  for (int t = 0; t < feats.rows(); ++t) {
    for (int d = 0; d < feats.cols(); ++d) {
      if (d) out << ',';
      out << feats.at(t, d);
    }
    out << '\n';
  }
  require(out.good(), ErrorCode::kIo, "write failed: " + path);
}

Matrix read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::kIo, "cannot open feature file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& field : split(line, ',')) {
      try {
        size_t used = 0;
        row.push_back(std::stod(field, &used));
        require(trim(std::string_view(field).substr(used)).empty(),
                ErrorCode::kParse, "trailing junk");
      } catch (const CtclmError&) {
        throw;
      } catch (const std::exception&) {
        fail(ErrorCode::kParse, path + ":" + std::to_string(line_no) +
                                    ": bad number '" + field + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(ErrorCode::kParse,
           path + ":" + std::to_string(line_no) + ": ragged row (got " +
               std::to_string(row.size()) + " columns, expected " +
               std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), ErrorCode::kParse, path + ": empty utterance");
  Matrix feats(static_cast<int>(rows.size()),
               static_cast<int>(rows.front().size()));
  for (size_t t = 0; t < rows.size(); ++t) {
    for (size_t d = 0; d < rows[t].size(); ++d) {
      feats.at(static_cast<int>(t), static_cast<int>(d)) = rows[t][d];
    }
  }
  return feats;
}

}  // namespace

void write_feature_file(const std::string& path, const Matrix& feats) {
  if (has_csv_extension(path)) {
    write_csv(path, feats);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::kIo, "cannot write feature file: " + path);
  uint32_t header[4];
  std::memcpy(&header[0], kMagic, 4);
  header[1] = kVersion;
  header[2] = static_cast<uint32_t>(feats.rows());
  header[3] = static_cast<uint32_t>(feats.cols());
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  out.write(reinterpret_cast<const char*>(feats.data().data()),
            static_cast<std::streamsize>(feats.size() * sizeof(double)));
  require(out.good(), ErrorCode::kIo, "write failed: " + path);
}

Matrix read_feature_file(const std::string& path) {
  if (has_csv_extension(path)) return read_csv(path);
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::kIo, "cannot open feature file: " + path);
  uint32_t header[4];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  require(in.gcount() == sizeof(header), ErrorCode::kParse,
          path + ": truncated header");
  require(std::memcmp(&header[0], kMagic, 4) == 0, ErrorCode::kParse,
          path + ": bad magic (not a feature file)");
  require(header[1] == kVersion, ErrorCode::kParse,
          path + ": unsupported feature-file version " +
              std::to_string(header[1]));
  uint32_t frames = header[2];
  uint32_t dims = header[3];
  require(frames > 0, ErrorCode::kParse, path + ": empty utterance");
  require(dims > 0, ErrorCode::kParse, path + ": zero feature dimension");
  Matrix feats(static_cast<int>(frames), static_cast<int>(dims));
  in.read(reinterpret_cast<char*>(feats.data().data()),
          static_cast<std::streamsize>(feats.size() * sizeof(double)));
  require(in.gcount() ==
              static_cast<std::streamsize>(feats.size() * sizeof(double)),
          ErrorCode::kParse, path + ": truncated feature data");
  return feats;
}

}  // namespace ctclm
