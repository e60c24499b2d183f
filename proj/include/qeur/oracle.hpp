// Copyright 2026 The qeur authors
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
#include <limits>
#include <thread>
#include <vector>

#include "qeur/bloch.hpp"
#include "qeur/entropy.hpp"
#include "qeur/uncertainty.hpp"

namespace qeur {

/// Grid resolution of the brute-force search. The defaults give min_value
/// accuracy well below 1e-9 for the smooth entropy-sum objectives.
struct GridSpec {
  int n_theta = 1024;
  int n_phi = 2048;
  int refinements = 3;
};

/// Result of a brute-force global minimization over the Bloch sphere.
struct OracleResult {
  double min_value = 0.0;
  PureState argmin{0.0, 0.0};
  int grid_theta = 0;
  int grid_phi = 0;
  int refinement_levels = 0;
};

namespace detail {

// Entropy-sum objective evaluated directly from spherical angles. Valid for
// any real (theta, phi); out-of-range angles still describe a point on the
// sphere, which lets refinement windows cross the coordinate seams.
class EntropySumObjective {
 public:
  EntropySumObjective(const EntropyIndex& qa, const EntropyIndex& qb,
                      const ObservablePair& pair)
      : qa_(qa),
        qb_(qb),
        a_(pair.first().direction()),
        b_(pair.second().direction()) {}

  double operator()(double theta, double phi) const {
    const double st = std::sin(theta);
    const double sx = std::cos(phi) * st;
    const double sy = std::sin(phi) * st;
    const double sz = std::cos(theta);
    const double da = a_.x() * sx + a_.y() * sy + a_.z() * sz;
    const double db = b_.x() * sx + b_.y() * sy + b_.z() * sz;
    return renyi_entropy(qa_, ProbabilityPair(0.5 * (1.0 + da), 0.5 * (1.0 - da))) +
           renyi_entropy(qb_, ProbabilityPair(0.5 * (1.0 + db), 0.5 * (1.0 - db)));
  }

 private:
  EntropyIndex qa_, qb_;
  BlochVector a_, b_;
};

struct GridBest {
  double value = std::numeric_limits<double>::infinity();
  double theta = 0.0;
  double phi = 0.0;
};

}  // namespace detail

/// Minimizes H_{q_a}(A) + H_{q_b}(B) over all pure states by exhaustive grid
/// search plus local refinement. The coarse pass samples theta at the
/// n_theta cell midpoints of [0, pi] and phi at n_phi points of [0, 2*pi);
/// each refinement pass shrinks the grid spacing by 32x around the current
/// best, scanning one coarse cell in each direction. Deterministic: the scan
/// runs in row-major (theta, phi) order and keeps the first strict minimum,
/// so coarse-grid ties resolve to the smallest (theta, phi); worker count
/// does not affect the result because rows are reduced in index order.
///
/// The search never uses the coplanarity reduction or the closed-form bound;
/// it is the independent check of both.
inline OracleResult brute_force_min(const EntropyIndex& q_a,
                                    const EntropyIndex& q_b,
                                    const ObservablePair& pair,
                                    const GridSpec& grid = {}) {
  const detail::EntropySumObjective objective(q_a, q_b, pair);

  const int n_theta = grid.n_theta;
  const int n_phi = grid.n_phi;
  const double theta_step = kPi / n_theta;
  const double phi_step = kTwoPi / n_phi;

  // Coarse pass: per-row minima, rows split across workers, combined in row
  // order so the reduction is independent of the worker count.
  std::vector<detail::GridBest> row_best(n_theta);
  const auto scan_rows = [&](int row_begin, int row_end) {
    for (int i = row_begin; i < row_end; ++i) {
      const double theta = theta_step * (i + 0.5);
      detail::GridBest best;
      for (int j = 0; j < n_phi; ++j) {
        const double phi = phi_step * j;
        const double value = objective(theta, phi);
        if (value < best.value) {
          best = {value, theta, phi};
        }
      }
      row_best[i] = best;
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(
      std::min<unsigned>(hw == 0 ? 1 : hw, static_cast<unsigned>(n_theta)));
  if (workers <= 1) {
    scan_rows(0, n_theta);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int rows_per_worker = (n_theta + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * rows_per_worker;
      const int end = std::min(n_theta, begin + rows_per_worker);
      if (begin >= end) break;
      pool.emplace_back(scan_rows, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  detail::GridBest best;
  for (const detail::GridBest& rb : row_best) {
    if (rb.value < best.value) best = rb;
  }

  // Refinement: 65x65 window spanning +-1 previous cell, spacing / 32.
  double dt = theta_step;
  double dp = phi_step;
  for (int level = 0; level < grid.refinements; ++level) {
    dt /= 32.0;
    dp /= 32.0;
    const double center_theta = best.theta;
    const double center_phi = best.phi;
    for (int ki = -32; ki <= 32; ++ki) {
      const double theta = center_theta + ki * dt;
      for (int kj = -32; kj <= 32; ++kj) {
        const double phi = center_phi + kj * dp;
        const double value = objective(theta, phi);
        if (value < best.value) {
          best = {value, theta, phi};
        }
      }
    }
  }

  OracleResult result;
  // Canonicalize the angles, then re-evaluate so that min_value is exactly
  // the objective at the reported argmin.
  const double st = std::sin(best.theta);
  result.argmin = PureState::from_bloch(BlochVector(
      std::cos(best.phi) * st, std::sin(best.phi) * st, std::cos(best.theta)));
  result.min_value = objective(result.argmin.theta(), result.argmin.phi());
  result.grid_theta = n_theta;
  result.grid_phi = n_phi;
  result.refinement_levels = grid.refinements;
  return result;
}

/// Cross-check of the closed-form collision bound against the brute-force
/// minimum. gap = oracle - analytic: beyond ~1e-7 a positive gap indicts the
/// bound, a negative one the oracle.
struct BoundCheck {
  double analytic = 0.0;
  double oracle = 0.0;
  double gap = 0.0;
};

inline BoundCheck verify_bound(const ObservablePair& pair,
                               const GridSpec& grid = {}) {
  BoundCheck check;
  check.analytic = analytic_bound(pair.overlap());
  check.oracle = brute_force_min(EntropyIndex::finite(2.0),
                                 EntropyIndex::finite(2.0), pair, grid)
                     .min_value;
  check.gap = check.oracle - check.analytic;
  return check;
}

}  // namespace qeur
