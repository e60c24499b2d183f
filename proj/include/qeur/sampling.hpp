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
#include <cstdint>
#include <random>

#include "qeur/bloch.hpp"

namespace qeur {

/// Deterministic sampler for reproducible verification runs. Uniform doubles
/// are built from the top 53 bits of mt19937_64 (whose output sequence the
/// standard fixes exactly), so a given seed yields the same pairs and states
/// on every run and platform. Directions are uniform on the sphere via
/// (z, phi) sampling; near-commuting direction pairs are redrawn.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return (rng_() >> 11) * 0x1.0p-53; }

  BlochVector direction() {
    const double z = 2.0 * unit() - 1.0;
    const double phi = kTwoPi * unit();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return BlochVector(r * std::cos(phi), r * std::sin(phi), z);
  }

  PureState state() {
    const double theta = std::acos(1.0 - 2.0 * unit());
    const double phi = kTwoPi * unit();
    return PureState(theta, phi);
  }

  ObservablePair pair() {
    for (;;) {
      const BlochVector a = direction();
      const BlochVector b = direction();
      if (std::abs(a.dot(b)) > 1.0 - 1e-9) continue;  // too close to commuting
      return ObservablePair::from_directions(a, b);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qeur
