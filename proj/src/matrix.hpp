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

#include <cstddef>
#include <vector>

#include "error.hpp"

namespace ctclm {

// Dense row-major double matrix. Owns its storage; used for features,
// log-posterior lattices and all model parameters.
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols, double value = 0.0) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, ErrorCode::kInvalidArg,
            "matrix dimensions must be non-negative");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), value);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(int r, int c) {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  double at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  double* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const double* row(int r) const {
    return data_.data() + static_cast<size_t>(r) * cols_;
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace ctclm
