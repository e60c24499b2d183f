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
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qeur/bloch.hpp"
#include "qeur/entropy.hpp"

namespace qeur {

// Largest possible collision-entropy sum, reached when the state is
// perpendicular to both observable directions.
inline const double kMaxUncertainty = 2.0 * std::log(2.0);

// Tolerance inside which a pair counts as complementary (gamma = pi/2); the
// complementary case has four minimum-uncertainty states instead of two.
inline constexpr double kComplementaryTolerance = 1e-9;

/// Regime boundaries of the critical-point structure: below
/// lower_critical_gamma() and at/above upper_critical_gamma() the
/// stationarity equation has only the two closed-form solutions; between
/// them a non-trivial pair exists as well.
inline double upper_critical_gamma() { return std::acos(-1.0 / 3.0); }
inline double lower_critical_gamma() { return kPi - upper_critical_gamma(); }

/// Sum of the two collision entropies H_2(A) + H_2(B) for the given state,
/// in nats. Computed through the Born probabilities; equals
/// -ln((1+(a.s)^2)/2) - ln((1+(b.s)^2)/2).
inline double collision_uncertainty(const ObservablePair& pair,
                                    const PureState& state) {
  const EntropyIndex collision = EntropyIndex::finite(2.0);
  return renyi_entropy(collision, outcome_probabilities(pair.first(), state)) +
         renyi_entropy(collision, outcome_probabilities(pair.second(), state));
}

/// Collision uncertainty of a state coplanar with the two observable
/// directions, parametrized by the angle chi between the state and the first
/// direction: -ln((1+cos^2 chi)/2) - ln((1+cos^2(gamma-chi))/2).
/// Periodic in chi with period pi; chi may be any real.
inline double coplanar_uncertainty(double gamma, double chi) {
  if (gamma <= kGammaTolerance || gamma >= kPi - kGammaTolerance) {
    throw CommutingObservables("gamma must lie strictly inside (0, pi)");
  }
  const double ca = std::cos(chi);
  const double cb = std::cos(gamma - chi);
  return -std::log(0.5 * (1.0 + ca * ca)) - std::log(0.5 * (1.0 + cb * cb));
}

/// Optimal lower bound of the collision uncertainty as a function of the
/// overlap: -2 ln((1+c^2)/2). Strictly decreasing on [1/sqrt(2), 1), from
/// 2 ln(4/3) down to 0.
inline double analytic_bound(double c) {
  if (c < kMinOverlap - 1e-12 || c >= 1.0) {
    throw std::domain_error(
        "overlap must lie in [1/sqrt(2), 1) = [0.7071067811865476, 1)");
  }
  return -2.0 * std::log(0.5 * (1.0 + c * c));
}

enum class CriticalKind { AbsoluteMin, RelativeMin, Maximum };

/// One solution chi of the stationarity equation in [0, pi].
struct CriticalPoint {
  double chi;
  double value;  // coplanar_uncertainty(gamma, chi)
  CriticalKind kind;
};

enum class Regime {
  TwoSolutionsLowGamma,    // gamma in (0, gamma*]
  FourSolutionsLowGamma,   // gamma in (gamma*, pi/2)
  Complementary,           // gamma = pi/2
  FourSolutionsHighGamma,  // gamma in (pi/2, gamma**)
  TwoSolutionsHighGamma,   // gamma in [gamma**, pi)
};

/// Full stationary-point structure of the coplanar uncertainty at one gamma.
struct CriticalPointReport {
  double gamma = 0.0;
  Regime regime = Regime::TwoSolutionsLowGamma;
  // Within 1e-6 of a regime boundary the merging roots may be unresolvable;
  // the regime is then derived from the detected count instead of the
  // analytic thresholds.
  bool boundary_ambiguous = false;
  std::vector<CriticalPoint> points;  // ascending in chi
  std::vector<double> chi_min;        // one angle, or {pi/4, 3pi/4} at pi/2
};

/// Minimum-uncertainty states of a pair: two antipodal Bloch vectors away
/// from gamma = pi/2, four on the complementary pair.
struct MinimizerSet {
  std::vector<BlochVector> bloch_vectors;
  double min_value = 0.0;
};

namespace detail {

// Angular slope of the single-observable collision entropy,
// d/dx [-1/2 ln((1+cos^2 x)/2)] = sin(2x)/(3+cos(2x)). A state angle chi is
// stationary exactly when slope(chi) = slope(gamma - chi).
inline double entropy_angle_slope(double x) {
  return std::sin(2.0 * x) / (3.0 + std::cos(2.0 * x));
}

inline double stationarity_residual(double gamma, double chi) {
  return entropy_angle_slope(chi) - entropy_angle_slope(gamma - chi);
}

}  // namespace detail

/// Solves the stationarity equation slope(chi) = slope(gamma - chi) on
/// [0, pi] by scanning 4096 uniform subintervals for sign changes and
/// bisecting each bracket to 1e-12, then deduplicating within 1e-9.
/// Roots landing exactly on scan nodes (the maxima 0, pi/2, pi of the
/// complementary case, where the residual does not change sign inside the
/// domain) are picked up by a |residual| < 1e-13 node test.
inline CriticalPointReport critical_points(double gamma) {
  if (gamma <= kGammaTolerance || gamma >= kPi - kGammaTolerance) {
    throw CommutingObservables("gamma must lie strictly inside (0, pi)");
  }

  const bool complementary = std::abs(gamma - kPi / 2.0) <= kComplementaryTolerance;
  // Solve at exactly pi/2 in the complementary band so the degenerate
  // five-solution structure is reported consistently.
  const double g = complementary ? kPi / 2.0 : gamma;

  constexpr int kScanIntervals = 4096;
  constexpr double kNodeResidualTolerance = 1e-13;
  constexpr double kChiAccuracy = 1e-12;
  constexpr double kDedupDistance = 1e-9;

  std::vector<double> nodes(kScanIntervals + 1);
  std::vector<double> residual(kScanIntervals + 1);
  std::vector<bool> is_node_root(kScanIntervals + 1);
  for (int i = 0; i <= kScanIntervals; ++i) {
    nodes[i] = kPi * (static_cast<double>(i) / kScanIntervals);
    residual[i] = detail::stationarity_residual(g, nodes[i]);
    is_node_root[i] = std::abs(residual[i]) < kNodeResidualTolerance;
  }

  std::vector<double> roots;
  for (int i = 0; i <= kScanIntervals; ++i) {
    if (is_node_root[i]) roots.push_back(nodes[i]);
  }
  for (int i = 0; i < kScanIntervals; ++i) {
    if (is_node_root[i] || is_node_root[i + 1]) continue;
    if (residual[i] * residual[i + 1] >= 0.0) continue;
    double lo = nodes[i], hi = nodes[i + 1];
    double res_lo = residual[i];
    while (hi - lo > kChiAccuracy) {
      const double mid = 0.5 * (lo + hi);
      const double res_mid = detail::stationarity_residual(g, mid);
      if (res_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((res_mid < 0.0) == (res_lo < 0.0)) {
        lo = mid;
        res_lo = res_mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique_roots;
  for (double r : roots) {
    if (unique_roots.empty() || r - unique_roots.back() > kDedupDistance) {
      unique_roots.push_back(r);
    }
  }

  CriticalPointReport report;
  report.gamma = gamma;
  report.boundary_ambiguous =
      std::abs(gamma - lower_critical_gamma()) < 1e-6 ||
      std::abs(gamma - upper_critical_gamma()) < 1e-6;

  // Classify by probing the uncertainty a step to each side; ties (possible
  // only at the degenerate regime boundaries, where the merged point is a
  // flat maximum) fall through to Maximum.
  constexpr double kProbeStep = 1e-5;
  double global_min = std::numeric_limits<double>::infinity();
  for (double chi : unique_roots) {
    CriticalPoint point;
    point.chi = chi;
    point.value = coplanar_uncertainty(g, chi);
    const double left = coplanar_uncertainty(g, chi - kProbeStep);
    const double right = coplanar_uncertainty(g, chi + kProbeStep);
    if (left > point.value && right > point.value) {
      point.kind = CriticalKind::AbsoluteMin;  // refined below
      global_min = std::min(global_min, point.value);
    } else {
      point.kind = CriticalKind::Maximum;
    }
    report.points.push_back(point);
  }
  for (CriticalPoint& point : report.points) {
    if (point.kind != CriticalKind::Maximum) {
      point.kind = point.value <= global_min + 1e-10 ? CriticalKind::AbsoluteMin
                                                     : CriticalKind::RelativeMin;
    }
  }

  const std::size_t count = report.points.size();
  if (complementary) {
    report.regime = Regime::Complementary;
    report.chi_min = {kPi / 4.0, 3.0 * kPi / 4.0};
    if (count != 5) {
      throw std::logic_error("critical_points: complementary pair must have 5 solutions");
    }
  } else {
    if (report.boundary_ambiguous) {
      // Do not guess which side of the boundary we are on; label by count.
      const bool low = gamma < kPi / 2.0;
      report.regime = count == 4
                          ? (low ? Regime::FourSolutionsLowGamma
                                 : Regime::FourSolutionsHighGamma)
                          : (low ? Regime::TwoSolutionsLowGamma
                                 : Regime::TwoSolutionsHighGamma);
    } else if (gamma <= lower_critical_gamma()) {
      report.regime = Regime::TwoSolutionsLowGamma;
    } else if (gamma < kPi / 2.0) {
      report.regime = Regime::FourSolutionsLowGamma;
    } else if (gamma < upper_critical_gamma()) {
      report.regime = Regime::FourSolutionsHighGamma;
    } else {
      report.regime = Regime::TwoSolutionsHighGamma;
    }
    const std::size_t expected =
        (report.regime == Regime::TwoSolutionsLowGamma ||
         report.regime == Regime::TwoSolutionsHighGamma)
            ? 2
            : 4;
    if (!report.boundary_ambiguous && count != expected) {
      throw std::logic_error(
          "critical_points: detected solution count does not match regime");
    }
    report.chi_min = {gamma < kPi / 2.0 ? gamma / 2.0
                                        : gamma / 2.0 + kPi / 2.0};
  }
  return report;
}

/// States saturating the collision bound. Away from pi/2 these are the two
/// antipodal unit vectors along b+a (gamma < pi/2) or b-a (gamma > pi/2),
/// whose norm is 2c; on a complementary pair all four arise.
inline MinimizerSet minimizers(const ObservablePair& pair) {
  const BlochVector& a = pair.first().direction();
  const BlochVector& b = pair.second().direction();
  const double c = pair.overlap();
  const double inv = 1.0 / (2.0 * c);

  const auto sum_branch = [&] {
    return BlochVector((b.x() + a.x()) * inv, (b.y() + a.y()) * inv,
                       (b.z() + a.z()) * inv);
  };
  const auto difference_branch = [&] {
    return BlochVector((b.x() - a.x()) * inv, (b.y() - a.y()) * inv,
                       (b.z() - a.z()) * inv);
  };

  MinimizerSet set;
  set.min_value = analytic_bound(c);
  if (std::abs(pair.gamma() - kPi / 2.0) <= kComplementaryTolerance) {
    const BlochVector plus = sum_branch();
    const BlochVector minus = difference_branch();
    set.bloch_vectors = {plus, plus.antipode(), minus, minus.antipode()};
  } else if (pair.gamma() < kPi / 2.0) {
    const BlochVector plus = sum_branch();
    set.bloch_vectors = {plus, plus.antipode()};
  } else {
    const BlochVector minus = difference_branch();
    set.bloch_vectors = {minus, minus.antipode()};
  }
  return set;
}

/// Density matrix of a pure state with Bloch vector v:
/// (1/2)(I + v . sigma). Hermitian, trace 1, idempotent.
struct DensityMatrix {
  std::complex<double> m[2][2];
};

inline DensityMatrix density_matrix(const BlochVector& v) {
  using cd = std::complex<double>;
  DensityMatrix rho;
  rho.m[0][0] = cd(0.5 * (1.0 + v.z()), 0.0);
  rho.m[0][1] = cd(0.5 * v.x(), -0.5 * v.y());
  rho.m[1][0] = cd(0.5 * v.x(), 0.5 * v.y());
  rho.m[1][1] = cd(0.5 * (1.0 - v.z()), 0.0);
  return rho;
}

}  // namespace qeur
