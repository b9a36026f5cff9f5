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

#include <span>
#include <vector>

#include "matrix.hpp"
#include "rng.hpp"

namespace ctclm {

// All functions here take a T x V matrix of per-frame log posteriors with
// blank fixed at the last vocabulary index (V-1). Rows must log-sum-exp to 0
// within 1e-9; entries of -inf are permitted and handled through a finite
// floor so no NaN can arise.

struct CtcResult {
  // -log p(target | inputs). +inf when the target has zero probability mass
  // (possible only with -inf entries in the input).
  double loss = 0.0;
  // T x V, d(loss)/d(log-posterior), treating every entry as a free
  // variable: the negated state occupancy. For the gradient with respect to
  // pre-softmax scores use ctc_grad_scores (posterior minus occupancy).
  Matrix grad;
  // Forward/backward lattices over the blank-interleaved target, (2L+1) x T,
  // in log space. Both include the emission term at their own frame.
  Matrix log_alpha;
  Matrix log_beta;
  // Total log likelihood from each recursion; they agree within 1e-8.
  double loglik_forward = 0.0;
  double loglik_backward = 0.0;
};

// Throws unless every row log-sum-exps to 0 within 1e-9 and entries stay
// non-positive (tiny positive rounding slack is tolerated).
void validate_log_prob_matrix(const Matrix& lp);

// Subtracts each row's log-sum-exp in place.
void log_normalize_rows(Matrix& lp);

// Minimum frame count that admits an alignment: |target| plus the number of
// adjacent equal label pairs (each needs a separating blank).
int ctc_required_frames(std::span<const int> target);

// Removes repeated consecutive labels, then removes blanks.
std::vector<int> collapse(std::span<const int> path, int blank);

// Forward-backward CTC loss with analytic gradient. The target must not
// contain blank; an infeasible target (T below the required length) raises
// ErrorCode::kInfeasible. An empty target is legal for any T >= 0.
CtcResult ctc_loss(const Matrix& lp, std::span<const int> target);

// d(loss)/d(pre-softmax scores) = posterior - occupancy. This is also what
// central differences of ctc_loss measure when each perturbed row is
// re-log-normalized, since renormalization projects out the row-sum
// direction.
Matrix ctc_grad_scores(const Matrix& lp, const CtcResult& result);

// Compares the analytic gradient against central finite differences of
// ctc_loss under row re-log-normalization and returns the maximum relative
// error over all T*V entries. eps must be positive.
double ctc_grad_check(const Matrix& lp, std::span<const int> target,
                      double eps);

// Literal definition of the loss: enumerates all V^T alignment paths, sums
// the probability of those that collapse to the target, and returns the
// negated log of the sum. Guarded to V^T <= 10^7. Infeasible targets raise
// the same error as ctc_loss; a feasible target with zero mass yields +inf.
double brute_force_loss(const Matrix& lp, std::span<const int> target);

// Random log-normalized T x V matrix (log of a Dirichlet-like draw).
Matrix random_log_prob_matrix(Rng& rng, int frames, int vocab);

// Random blank-free target of the given length that is feasible for the
// given frame count (repeats are re-drawn while the required length
// exceeds frames).
std::vector<int> random_feasible_target(Rng& rng, int frames, int vocab,
                                        int length);

}  // namespace ctclm
