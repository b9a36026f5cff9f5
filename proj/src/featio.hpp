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

#include "matrix.hpp"

namespace ctclm {

// Dense feature-matrix container: 16-byte header (magic "CTFB", u32 version,
// u32 frames, u32 dims) followed by row-major little-endian doubles. Files
// with a .csv extension are read/written as plain comma-separated rows
// instead, for tiny hand-written fixtures.

void write_feature_file(const std::string& path, const Matrix& feats);
Matrix read_feature_file(const std::string& path);

}  // namespace ctclm
