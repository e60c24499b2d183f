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

#include "qeur/bloch.hpp"
#include "qeur/entropy.hpp"
#include "qeur/oracle.hpp"
#include "qeur/uncertainty.hpp"

namespace qeur {

/// Thrown when a Renyi index falls outside the validity region (0, 2]^2 of
/// the generalized uncertainty relation.
struct IndexOutOfRegion : std::domain_error {
  using std::domain_error::domain_error;
};

enum class RelationName {
  HeisenbergRobertson,
  Luis,
  LandauPollak,
  MaassenUffink,
  RenyiPair,
};

/// One evaluated uncertainty relation, normalized so that every inequality
/// reads lhs >= rhs.
struct RelationReport {
  RelationName name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;  // lhs >= rhs - 1e-12
  bool saturated = false;  // |lhs - rhs| <= 1e-9
};

namespace detail {
inline RelationReport make_report(RelationName name, double lhs, double rhs) {
  RelationReport report;
  report.name = name;
  report.lhs = lhs;
  report.rhs = rhs;
  report.satisfied = lhs >= rhs - 1e-12;
  report.saturated = std::abs(lhs - rhs) <= 1e-9;
  return report;
}
}  // namespace detail

/// Standard-deviation product bound in Bloch form:
/// |a2||b2| sqrt(1-(a.s)^2) sqrt(1-(b.s)^2) >= |a2 b2| |(a x b) . s|.
/// The only relation where the observables' scale parameters matter; it is
/// trivial (rhs = 0) for every state coplanar with the two directions.
inline RelationReport heisenberg_robertson(const ObservablePair& pair,
                                           const PureState& state) {
  const BlochVector s = state.bloch_vector();
  const BlochVector& a = pair.first().direction();
  const BlochVector& b = pair.second().direction();
  const double da = a.dot(s);
  const double db = b.dot(s);
  const double scale =
      std::abs(pair.first().scale()) * std::abs(pair.second().scale());
  const double lhs = scale * std::sqrt(std::max(0.0, 1.0 - da * da)) *
                     std::sqrt(std::max(0.0, 1.0 - db * db));
  const double rhs = scale * std::abs(triple_product(a, b, s));
  return detail::make_report(RelationName::HeisenbergRobertson, lhs, rhs);
}

/// Collision-entropy form of the Luis purity relation for complementary
/// observables on N levels: H_2(A) + H_2(B) >= 2 ln(2N/(N+1)). Only the
/// qubit case N = 2 is supported; there it equals the optimal bound at
/// c = 1/sqrt(2), namely 2 ln(4/3).
inline double luis_bound(int n_levels = 2) {
  if (n_levels != 2) {
    throw std::invalid_argument("luis_bound: only N = 2 is supported");
  }
  return 2.0 * std::log(4.0 / 3.0);
}

/// Landau-Pollak: arccos sqrt(P_A) + arccos sqrt(P_B) >= arccos c, with P_O
/// the larger outcome probability of O.
inline RelationReport landau_pollak(const ObservablePair& pair,
                                    const PureState& state) {
  const double pa = outcome_probabilities(pair.first(), state).max_probability();
  const double pb = outcome_probabilities(pair.second(), state).max_probability();
  const double lhs = std::acos(std::min(1.0, std::sqrt(pa))) +
                     std::acos(std::min(1.0, std::sqrt(pb)));
  const double rhs = std::acos(pair.overlap());
  return detail::make_report(RelationName::LandauPollak, lhs, rhs);
}

/// Overlap recovered from the maximum probabilities when Landau-Pollak holds
/// with equality: sqrt(P_A P_B) - sqrt((1-P_A)(1-P_B)). Feeding
/// P_A = P_B = (1+c)/2 returns c identically.
inline double lp_saturation_overlap(double p_a, double p_b) {
  if (p_a < 0.5 - 1e-12 || p_a > 1.0 + 1e-12 || p_b < 0.5 - 1e-12 ||
      p_b > 1.0 + 1e-12) {
    throw std::domain_error(
        "maximum probabilities must lie in [1/2, 1]");
  }
  p_a = std::clamp(p_a, 0.5, 1.0);
  p_b = std::clamp(p_b, 0.5, 1.0);
  return std::sqrt(p_a * p_b) - std::sqrt((1.0 - p_a) * (1.0 - p_b));
}

/// Maassen-Uffink min-entropy relation:
/// H_inf(A) + H_inf(B) >= -2 ln((1+c)/2).
inline RelationReport maassen_uffink(const ObservablePair& pair,
                                     const PureState& state) {
  const EntropyIndex inf = EntropyIndex::min_entropy();
  const double lhs =
      renyi_entropy(inf, outcome_probabilities(pair.first(), state)) +
      renyi_entropy(inf, outcome_probabilities(pair.second(), state));
  const double rhs = overlap_bound(inf, pair.overlap());
  return detail::make_report(RelationName::MaassenUffink, lhs, rhs);
}

/// Generalized relation on the index region (0, 2]^2:
/// H_q(A) + H_q'(B) >= -2 ln((1+c^2)/2). Monotonicity of the Renyi family in
/// the order makes every point of the region inherit the collision bound;
/// the bound is optimal at the vertex q = q' = 2.
inline RelationReport renyi_pair_bound(const EntropyIndex& q,
                                       const EntropyIndex& q_prime,
                                       const ObservablePair& pair,
                                       const PureState& state) {
  for (const EntropyIndex* index : {&q, &q_prime}) {
    if (!(index->order() <= 2.0)) {
      throw IndexOutOfRegion(
          "renyi_pair_bound: indices must satisfy 0 < q <= 2");
    }
  }
  const double lhs =
      renyi_entropy(q, outcome_probabilities(pair.first(), state)) +
      renyi_entropy(q_prime, outcome_probabilities(pair.second(), state));
  const double rhs = analytic_bound(pair.overlap());
  return detail::make_report(RelationName::RenyiPair, lhs, rhs);
}

/// Outcome of probing whether the Shannon analogue of the overlap bound is
/// the true minimum at a given overlap. It is not below c ~ 0.834: the
/// brute-force minimum drops under F_1(c) there.
struct ShannonProbe {
  double f1 = 0.0;         // overlap_bound(Shannon, c)
  double brute_min = 0.0;  // grid minimum of H_1(A) + H_1(B)
  bool f1_is_optimal = false;
};

inline ShannonProbe shannon_counterexample_probe(double c,
                                                 const GridSpec& grid = {}) {
  const EntropyIndex shannon = EntropyIndex::shannon();
  ShannonProbe probe;
  probe.f1 = overlap_bound(shannon, c);

  // Any pair realizing the overlap works; take the low-gamma branch in the
  // xz-plane.
  const double gamma = 2.0 * std::acos(c);
  const ObservablePair pair = ObservablePair::from_directions(
      BlochVector(0.0, 0.0, 1.0),
      BlochVector(std::sin(gamma), 0.0, std::cos(gamma)));
  probe.brute_min = brute_force_min(shannon, shannon, pair, grid).min_value;
  probe.f1_is_optimal = probe.brute_min >= probe.f1 - 1e-7;
  return probe;
}

}  // namespace qeur
