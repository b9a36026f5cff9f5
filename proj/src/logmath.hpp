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

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>

namespace ctclm {

// Finite stand-in for log(0). Keeps lattice arithmetic NaN-free when inputs
// carry -inf log probabilities: (-inf) - (-inf) never occurs because every
// operand is clamped to this floor first.
inline constexpr double kLogZero = -1e30;

// Threshold below which a log value is treated as "no probability mass".
inline constexpr double kLogZeroThreshold = -0.5e30;

inline double clamp_log(double x) { return x < kLogZero ? kLogZero : x; }

inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a <= kLogZero) return kLogZero;
  double d = b - a;  // <= 0
  if (d < -745.0) return a;
  return a + std::log1p(std::exp(d));
}

inline double log_add3(double a, double b, double c) {
  return log_add(log_add(a, b), c);
}

inline double log_sum_exp(std::span<const double> xs) {
  double m = kLogZero;
  for (double x : xs) m = std::max(m, clamp_log(x));
  if (m <= kLogZero) return kLogZero;
  double s = 0.0;
  for (double x : xs) s += std::exp(clamp_log(x) - m);
  return m + std::log(s);
}

}  // namespace ctclm
