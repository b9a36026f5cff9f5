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

#include "ctc.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "logmath.hpp"

namespace ctclm {

void validate_log_prob_matrix(const Matrix& lp) {
  for (int t = 0; t < lp.rows(); ++t) {
    double m = kLogZero;
    for (int v = 0; v < lp.cols(); ++v) {
      double x = lp.at(t, v);
      require(!std::isnan(x), ErrorCode::kInvalidArg,
              "log-posterior matrix contains NaN at row " + std::to_string(t));
      require(x <= 1e-9, ErrorCode::kInvalidArg,
              "log-posterior entry above 0 at row " + std::to_string(t));
      m = std::max(m, clamp_log(x));
    }
    double s = 0.0;
    for (int v = 0; v < lp.cols(); ++v) s += std::exp(clamp_log(lp.at(t, v)) - m);
    double lse = m + std::log(s);
    require(std::abs(lse) <= 1e-9, ErrorCode::kInvalidArg,
            "log-posterior row " + std::to_string(t) +
                " is not normalized (log-sum-exp = " + std::to_string(lse) +
                ")");
  }
}

void log_normalize_rows(Matrix& lp) {
  for (int t = 0; t < lp.rows(); ++t) {
    double lse = log_sum_exp(std::span<const double>(lp.row(t),
                                                     static_cast<size_t>(lp.cols())));
    for (int v = 0; v < lp.cols(); ++v) {
      lp.at(t, v) = clamp_log(lp.at(t, v)) - lse;
    }
  }
}

int ctc_required_frames(std::span<const int> target) {
  int repeats = 0;
  for (size_t i = 1; i < target.size(); ++i) {
    if (target[i] == target[i - 1]) ++repeats;
  }
  return static_cast<int>(target.size()) + repeats;
}

std::vector<int> collapse(std::span<const int> path, int blank) {
  std::vector<int> out;
  int prev = blank;
  for (int label : path) {
    if (label != prev && label != blank) out.push_back(label);
    prev = label;
  }
  return out;
}

namespace {

void check_target(const Matrix& lp, std::span<const int> target) {
  int blank = lp.cols() - 1;
  require(lp.cols() >= 1, ErrorCode::kInvalidArg, "vocabulary must be non-empty");
  for (int label : target) {
    require(label >= 0 && label < blank, ErrorCode::kInvalidArg,
            "target label " + std::to_string(label) +
                " outside the non-blank vocabulary [0, " +
                std::to_string(blank) + ")");
  }
  int required = ctc_required_frames(target);
  if (lp.rows() < required) {
    fail(ErrorCode::kInfeasible,
         "infeasible target: needs at least " + std::to_string(required) +
             " frames, got " + std::to_string(lp.rows()));
  }
}

// Blank-interleaved target label at lattice position s.
inline int extended_label(std::span<const int> target, int s, int blank) {
  return (s % 2 == 0) ? blank : target[static_cast<size_t>(s / 2)];
}

}  // namespace

CtcResult ctc_loss(const Matrix& lp, std::span<const int> target) {
  validate_log_prob_matrix(lp);
  check_target(lp, target);

  const int T = lp.rows();
  const int V = lp.cols();
  const int blank = V - 1;
  const int L = static_cast<int>(target.size());
  const int S = 2 * L + 1;

  CtcResult res;
  res.grad = Matrix(T, V, 0.0);
  if (T == 0) {
    // Only the empty target is feasible here; the empty path has mass 1.
    res.loss = 0.0;
    res.loglik_forward = 0.0;
    res.loglik_backward = 0.0;
    return res;
  }

  auto emit = [&](int t, int s) {
    return clamp_log(lp.at(t, extended_label(target, s, blank)));
  };

  // Forward lattice. alpha(s, t) includes the emission at frame t.
  Matrix alpha(S, T, kLogZero);
  alpha.at(0, 0) = emit(0, 0);
  if (S > 1) alpha.at(1, 0) = emit(0, 1);
  for (int t = 1; t < T; ++t) {
    for (int s = 0; s < S; ++s) {
      double a = alpha.at(s, t - 1);
      double b = (s >= 1) ? alpha.at(s - 1, t - 1) : kLogZero;
      // The skip transition is allowed only when it does not jump over a
      // required blank: target label differs from the label two back.
      double c = kLogZero;
      if (s >= 2 && s % 2 == 1 &&
          extended_label(target, s, blank) !=
              extended_label(target, s - 2, blank)) {
        c = alpha.at(s - 2, t - 1);
      }
      alpha.at(s, t) = clamp_log(log_add3(a, b, c) + emit(t, s));
    }
  }
  res.loglik_forward =
      (S > 1) ? log_add(alpha.at(S - 1, T - 1), alpha.at(S - 2, T - 1))
              : alpha.at(0, T - 1);

  // Backward lattice, mirrored; beta(s, t) also includes the emission at t.
  Matrix beta(S, T, kLogZero);
  beta.at(S - 1, T - 1) = emit(T - 1, S - 1);
  if (S > 1) beta.at(S - 2, T - 1) = emit(T - 1, S - 2);
  for (int t = T - 2; t >= 0; --t) {
    for (int s = S - 1; s >= 0; --s) {
      double a = beta.at(s, t + 1);
      double b = (s + 1 < S) ? beta.at(s + 1, t + 1) : kLogZero;
      double c = kLogZero;
      if (s + 2 < S && s % 2 == 1 &&
          extended_label(target, s, blank) !=
              extended_label(target, s + 2, blank)) {
        c = beta.at(s + 2, t + 1);
      }
      beta.at(s, t) = clamp_log(log_add3(a, b, c) + emit(t, s));
    }
  }
  res.loglik_backward = (S > 1) ? log_add(beta.at(0, 0), beta.at(1, 0))
                                : beta.at(0, 0);

  res.log_alpha = std::move(alpha);
  res.log_beta = std::move(beta);

  if (res.loglik_forward <= kLogZeroThreshold) {
    // No alignment carries probability mass; the loss is +inf and the
    // gradient is left at zero rather than poisoning downstream sums.
    res.loss = std::numeric_limits<double>::infinity();
    return res;
  }
  res.loss = -res.loglik_forward;

  // Occupancy: gamma(s, t) = alpha + beta - emission (the emission term is
  // counted twice in the product). Summing exp(gamma - loglik) per vocabulary
  // entry gives the posterior state occupancy; the gradient w.r.t. the
  // log-posterior entry is its negation.
  for (int t = 0; t < T; ++t) {
    for (int s = 0; s < S; ++s) {
      double gamma =
          res.log_alpha.at(s, t) + res.log_beta.at(s, t) - emit(t, s);
      double w = std::exp(gamma - res.loglik_forward);
      if (w > 0.0) {
        res.grad.at(t, extended_label(target, s, blank)) -= w;
      }
    }
  }
  return res;
}

Matrix ctc_grad_scores(const Matrix& lp, const CtcResult& result) {
  Matrix g(lp.rows(), lp.cols(), 0.0);
  for (int t = 0; t < lp.rows(); ++t) {
    for (int v = 0; v < lp.cols(); ++v) {
      double posterior = std::exp(clamp_log(lp.at(t, v)));
      g.at(t, v) = posterior + result.grad.at(t, v);  // posterior - occupancy
    }
  }
  return g;
}

double ctc_grad_check(const Matrix& lp, std::span<const int> target,
                      double eps) {
  require(eps > 0.0, ErrorCode::kInvalidArg,
          "degenerate step: eps must be positive");
  CtcResult base = ctc_loss(lp, target);
  Matrix analytic = ctc_grad_scores(lp, base);

  double max_rel = 0.0;
  for (int t = 0; t < lp.rows(); ++t) {
    for (int v = 0; v < lp.cols(); ++v) {
      double fd[2];
      for (int dir = 0; dir < 2; ++dir) {
        Matrix perturbed = lp;
        perturbed.at(t, v) =
            clamp_log(perturbed.at(t, v)) + (dir == 0 ? eps : -eps);
        // Re-normalize only the touched row so the input stays a valid
        // log-posterior matrix.
        double lse = log_sum_exp(std::span<const double>(
            perturbed.row(t), static_cast<size_t>(perturbed.cols())));
        for (int u = 0; u < perturbed.cols(); ++u) {
          perturbed.at(t, u) = clamp_log(perturbed.at(t, u)) - lse;
        }
        fd[dir] = ctc_loss(perturbed, target).loss;
      }
      double numeric = (fd[0] - fd[1]) / (2.0 * eps);
      double a = analytic.at(t, v);
      double denom = std::max({std::abs(numeric), std::abs(a), 1e-3});
      max_rel = std::max(max_rel, std::abs(numeric - a) / denom);
    }
  }
  return max_rel;
}

double brute_force_loss(const Matrix& lp, std::span<const int> target) {
  validate_log_prob_matrix(lp);
  check_target(lp, target);

  const int T = lp.rows();
  const int V = lp.cols();
  const int blank = V - 1;

  double paths = 1.0;
  for (int t = 0; t < T; ++t) {
    paths *= V;
    require(paths <= 1e7, ErrorCode::kSize,
            "brute-force enumeration guard exceeded: V^T > 10^7");
  }
  if (T == 0) return 0.0;

  std::vector<int> path(static_cast<size_t>(T), 0);
  std::vector<int> want(target.begin(), target.end());
  double total = kLogZero;
  while (true) {
    if (collapse(path, blank) == want) {
      double lp_path = 0.0;
      for (int t = 0; t < T; ++t) lp_path += clamp_log(lp.at(t, path[static_cast<size_t>(t)]));
      total = log_add(total, lp_path);
    }
    // Odometer increment over the V^T paths.
    int t = T - 1;
    while (t >= 0) {
      if (++path[static_cast<size_t>(t)] < V) break;
      path[static_cast<size_t>(t)] = 0;
      --t;
    }
    if (t < 0) break;
  }
  if (total <= kLogZeroThreshold) {
    return std::numeric_limits<double>::infinity();
  }
  return -total;
}

Matrix random_log_prob_matrix(Rng& rng, int frames, int vocab) {
  require(frames >= 0 && vocab >= 1, ErrorCode::kInvalidArg,
          "bad log-prob matrix shape");
  Matrix lp(frames, vocab);
  for (int t = 0; t < frames; ++t) {
    for (int v = 0; v < vocab; ++v) {
      // Exponential draws normalize to a Dirichlet(1) row.
      lp.at(t, v) = std::log(-std::log(1.0 - rng.uniform()));
    }
  }
  log_normalize_rows(lp);
  return lp;
}

std::vector<int> random_feasible_target(Rng& rng, int frames, int vocab,
                                        int length) {
  require(length <= frames, ErrorCode::kInvalidArg,
          "target length exceeds frame count");
  std::vector<int> target(static_cast<size_t>(length));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& label : target) {
      label = static_cast<int>(rng.uniform_int(static_cast<uint64_t>(vocab - 1)));
    }
    if (ctc_required_frames(target) <= frames) return target;
  }
  // Fall back to a repeat-free target, always feasible when length <= frames.
  for (size_t i = 0; i < target.size(); ++i) {
    target[i] = static_cast<int>(i % static_cast<size_t>(vocab - 1));
  }
  return target;
}

}  // namespace ctclm
