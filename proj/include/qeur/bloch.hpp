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
#include <stdexcept>
#include <string>

namespace qeur {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Construction tolerances. Inputs within these bands are repaired silently;
// anything worse is treated as a caller error.
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-9;

// Angle band around 0 and pi inside which two directions are considered
// (anti)parallel, i.e. the observables commute and no overlap is defined.
inline constexpr double kGammaTolerance = 1e-9;

/// Thrown when a pair of observable directions is (anti)parallel: the
/// observables commute, the overlap degenerates to 1 and no nontrivial
/// uncertainty statement exists.
struct CommutingObservables : std::domain_error {
  using std::domain_error::domain_error;
};

/// Unit vector on the Bloch sphere. Represents either a pure-state direction
/// or the eigenbasis direction of a two-outcome observable.
class BlochVector {
 public:
  /// Accepts components whose norm is within kNormTolerance of 1 and
  /// renormalizes them; rejects anything further from the sphere.
  BlochVector(double x, double y, double z) : x_(x), y_(y), z_(z) {
    const double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (std::abs(n - 1.0) > kNormTolerance) {
      throw std::invalid_argument(
          "BlochVector: norm " + std::to_string(n) +
          " deviates from 1 by more than 1e-9");
    }
    x_ /= n;
    y_ /= n;
    z_ /= n;
  }

  /// Normalizes an arbitrary nonzero vector onto the sphere. This is the
  /// entry point for raw user input (CLI); rejects near-zero vectors.
  static BlochVector normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) {
      throw std::invalid_argument("BlochVector: cannot normalize a zero vector");
    }
    return BlochVector(x / n, y / n, z / n);
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  double dot(const BlochVector& o) const {
    return x_ * o.x_ + y_ * o.y_ + z_ * o.z_;
  }

  BlochVector antipode() const { return BlochVector(-x_, -y_, -z_); }

 private:
  double x_, y_, z_;
};

/// Scalar triple product (a x b) . s; the only cross-product the library
/// needs (Heisenberg-Robertson right-hand side).
inline double triple_product(const BlochVector& a, const BlochVector& b,
                             const BlochVector& s) {
  const double cx = a.y() * b.z() - a.z() * b.y();
  const double cy = a.z() * b.x() - a.x() * b.z();
  const double cz = a.x() * b.y() - a.y() * b.x();
  return cx * s.x() + cy * s.y() + cz * s.z();
}

/// Pure qubit state in spherical angles: theta in [0, pi], phi in [0, 2*pi).
class PureState {
 public:
  PureState(double theta, double phi) : theta_(theta), phi_(phi) {
    if (theta_ < -1e-12 || theta_ > kPi + 1e-12) {
      throw std::invalid_argument("PureState: theta must lie in [0, pi]");
    }
    theta_ = std::clamp(theta_, 0.0, kPi);
    phi_ = std::fmod(phi_, kTwoPi);
    if (phi_ < 0.0) phi_ += kTwoPi;
    if (phi_ >= kTwoPi) phi_ = 0.0;
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// The point on the Bloch sphere:
  /// (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)).
  BlochVector bloch_vector() const {
    const double st = std::sin(theta_);
    return BlochVector(std::cos(phi_) * st, std::sin(phi_) * st,
                       std::cos(theta_));
  }

  /// Canonical angles of a Bloch vector; phi is set to 0 at the poles.
  static PureState from_bloch(const BlochVector& v) {
    const double theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
    double phi = 0.0;
    if (std::sin(theta) > 1e-15) {
      phi = std::atan2(v.y(), v.x());
      if (phi < 0.0) phi += kTwoPi;
      if (phi >= kTwoPi) phi = 0.0;
    }
    return PureState(theta, phi);
  }

 private:
  double theta_, phi_;
};

/// Affine two-outcome qubit observable: offset*I + scale * direction . sigma.
/// scale = 0 would make it a multiple of the identity, which has no
/// two-outcome measurement, so it is rejected.
class Observable {
 public:
  Observable(double offset, double scale, const BlochVector& direction)
      : offset_(offset), scale_(scale), direction_(direction) {
    if (scale_ == 0.0) {
      throw std::invalid_argument(
          "Observable: scale must be nonzero (identity has no two-outcome "
          "measurement)");
    }
  }

  /// Observable with the given eigenbasis direction, unit scale, no offset.
  /// Entropic quantities depend only on the direction.
  static Observable from_direction(const BlochVector& direction) {
    return Observable(0.0, 1.0, direction);
  }

  double offset() const { return offset_; }
  double scale() const { return scale_; }
  const BlochVector& direction() const { return direction_; }

 private:
  double offset_, scale_;
  BlochVector direction_;
};

/// Angle between two observable directions together with the eigenbasis
/// overlap c = max |<a_i|b_j>|.
struct AngleOverlap {
  double gamma;  // in (0, pi), strictly
  double c;      // in [1/sqrt(2), 1)
};

/// Computes gamma = arccos(a . b) and the overlap c, which is cos(gamma/2)
/// for gamma <= pi/2 and sin(gamma/2) above. Throws CommutingObservables when
/// the directions are within kGammaTolerance of (anti)parallel.
inline AngleOverlap overlap(const BlochVector& a, const BlochVector& b) {
  const double t = std::clamp(a.dot(b), -1.0, 1.0);
  const double gamma = std::acos(t);
  if (gamma <= kGammaTolerance || gamma >= kPi - kGammaTolerance) {
    throw CommutingObservables(
        "observable directions are (anti)parallel: gamma must lie strictly "
        "inside (0, pi)");
  }
  const double c =
      gamma <= kPi / 2.0 ? std::cos(gamma / 2.0) : std::sin(gamma / 2.0);
  return {gamma, c};
}

/// Two non-commuting observables plus their derived angle and overlap.
class ObservablePair {
 public:
  ObservablePair(const Observable& first, const Observable& second)
      : first_(first), second_(second) {
    const AngleOverlap ov =
        ::qeur::overlap(first_.direction(), second_.direction());
    gamma_ = ov.gamma;
    overlap_ = ov.c;
  }

  static ObservablePair from_directions(const BlochVector& a,
                                        const BlochVector& b) {
    return ObservablePair(Observable::from_direction(a),
                          Observable::from_direction(b));
  }

  const Observable& first() const { return first_; }
  const Observable& second() const { return second_; }
  double gamma() const { return gamma_; }
  double overlap() const { return overlap_; }

 private:
  Observable first_, second_;
  double gamma_, overlap_;
};

/// Two-outcome probability distribution. Renormalizes sums within
/// kProbabilityTolerance of 1 and rejects anything further off.
class ProbabilityPair {
 public:
  ProbabilityPair(double p1, double p2) : p1_(p1), p2_(p2) {
    if (p1_ < -kProbabilityTolerance || p2_ < -kProbabilityTolerance ||
        p1_ > 1.0 + kProbabilityTolerance || p2_ > 1.0 + kProbabilityTolerance) {
      throw std::invalid_argument(
          "ProbabilityPair: probabilities must lie in [0, 1]");
    }
    p1_ = std::clamp(p1_, 0.0, 1.0);
    p2_ = std::clamp(p2_, 0.0, 1.0);
    const double sum = p1_ + p2_;
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw std::invalid_argument(
          "ProbabilityPair: probabilities must sum to 1 (got " +
          std::to_string(sum) + ")");
    }
    p1_ /= sum;
    p2_ /= sum;
  }

  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double max_probability() const { return std::max(p1_, p2_); }

 private:
  double p1_, p2_;
};

/// Born probabilities for the two outcomes: (1 +- d . s)/2 where d is the
/// observable direction and s the state's Bloch vector. Independent of the
/// observable's offset and scale.
inline ProbabilityPair outcome_probabilities(const Observable& observable,
                                             const PureState& state) {
  const double d = observable.direction().dot(state.bloch_vector());
  return ProbabilityPair(0.5 * (1.0 + d), 0.5 * (1.0 - d));
}

/// 2x2 matrix of squared eigenstate inner products |<a_i|b_j>|^2 in terms of
/// t = a . b. Rows and columns sum to 1; the largest entry is c^2.
struct OverlapMatrix {
  double m[2][2];
};

inline OverlapMatrix overlap_matrix(const ObservablePair& pair) {
  const double t =
      pair.first().direction().dot(pair.second().direction());
  const double hi = 0.5 * (1.0 + t);
  const double lo = 0.5 * (1.0 - t);
  return OverlapMatrix{{{hi, lo}, {lo, hi}}};
}

}  // namespace qeur
