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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qeur/bloch.hpp"

namespace qeur {

// Smallest overlap of two non-commuting qubit observables (complementary
// pair, gamma = pi/2).
inline const double kMinOverlap = 1.0 / std::sqrt(2.0);

/// Renyi order: a finite index q > 0 (q != 1), the Shannon limit q -> 1, or
/// the min-entropy limit q -> infinity. Finite orders within 1e-9 of 1 are
/// promoted to Shannon at construction; the (1/(1-q)) formula is unusable
/// that close to the removable singularity.
class EntropyIndex {
 public:
  enum class Kind { Finite, Shannon, MinEntropy };

  static EntropyIndex finite(double q) {
    if (!(q > 0.0)) {
      throw std::invalid_argument("EntropyIndex: order q must be positive");
    }
    if (std::abs(q - 1.0) <= 1e-9) return shannon();
    return EntropyIndex(Kind::Finite, q);
  }
  static EntropyIndex shannon() { return EntropyIndex(Kind::Shannon, 1.0); }
  static EntropyIndex min_entropy() {
    return EntropyIndex(Kind::MinEntropy,
                        std::numeric_limits<double>::infinity());
  }

  Kind kind() const { return kind_; }

  /// Effective order: the stored q for finite indices, 1 for Shannon,
  /// +infinity for min-entropy.
  double order() const { return q_; }

 private:
  EntropyIndex(Kind kind, double q) : kind_(kind), q_(q) {}
  Kind kind_;
  double q_;
};

namespace detail {
inline double xlnx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }
}  // namespace detail

/// Renyi entropy of a two-outcome distribution, in nats. Lies in [0, ln 2].
inline double renyi_entropy(const EntropyIndex& index,
                            const ProbabilityPair& dist) {
  const double p1 = dist.p1();
  const double p2 = dist.p2();
  switch (index.kind()) {
    case EntropyIndex::Kind::Shannon:
      return -(detail::xlnx(p1) + detail::xlnx(p2));
    case EntropyIndex::Kind::MinEntropy:
      return -std::log(dist.max_probability());
    case EntropyIndex::Kind::Finite:
      break;
  }
  const double q = index.order();
  const double power_sum =
      q == 2.0 ? p1 * p1 + p2 * p2 : std::pow(p1, q) + std::pow(p2, q);
  return std::log(power_sum) / (1.0 - q);
}

/// Purity of a distribution, p1^2 + p2^2 in [1/2, 1]. The collision entropy
/// is exactly -ln(purity).
inline double purity(const ProbabilityPair& dist) {
  return dist.p1() * dist.p1() + dist.p2() * dist.p2();
}

/// Entropy sum evaluated on the distribution ((1+c)/2, (1-c)/2): the value
/// the H_q(A) + H_q(B) sum takes on the states with both maximum
/// probabilities equal to (1+c)/2. For index 2 this is the optimal collision
/// bound -2 ln((1+c^2)/2); for min-entropy it is the Maassen-Uffink bound
/// -2 ln((1+c)/2); for Shannon it is optimal only above c ~ 0.834.
inline double overlap_bound(const EntropyIndex& index, double c) {
  if (c < kMinOverlap - 1e-12 || c >= 1.0) {
    throw std::domain_error(
        "overlap must lie in [1/sqrt(2), 1) = [0.7071067811865476, 1)");
  }
  const ProbabilityPair saturating(0.5 * (1.0 + c), 0.5 * (1.0 - c));
  return 2.0 * renyi_entropy(index, saturating);
}

}  // namespace qeur
