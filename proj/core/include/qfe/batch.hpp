// Copyright 2026 The qfesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFE_BATCH_HPP
#define QFE_BATCH_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfe/measure.hpp"
#include "qfe/qfe_state.hpp"

namespace qfe {

/// Exact dyadic probability: 0 or 2^-exponent. Terminal Z-measurement
/// probabilities are always of this form, so no tolerance is needed.
struct Probability {
  bool zero = true;
  int exponent = 0;  // meaningful when !zero

  static Probability none() { return {true, 0}; }
  static Probability dyadic(int exponent) { return {false, exponent}; }

  double value() const { return zero ? 0.0 : std::pow(2.0, -exponent); }
  std::string to_fraction() const;

  friend bool operator==(const Probability&, const Probability&) = default;
};

/// Probability that terminal Z-measurements of the given distinct qubits
/// yield the bits in beta, by GF(2) elimination of the corresponding rows of
/// A. The state is not modified. Duplicate indices are rejected.
Probability strong_prob_z(const QfeState& s, std::span<const int> qubits,
                          std::span<const std::uint8_t> beta);

/// Same query for measuring every qubit except the listed ones; elimination
/// consumes principal rows first, which is what makes the near-total case
/// cheap. beta is indexed by ascending measured qubit.
Probability strong_prob_all_but(const QfeState& s,
                                std::span<const int> unmeasured,
                                std::span<const std::uint8_t> beta);

/// Z-measures every qubit not listed in `unmeasured`, principal rows first
/// by index-fixing and the remainder by ordinary Z measurements. Returns the
/// outcomes in ascending qubit order; the state collapses accordingly.
std::vector<std::uint8_t> weak_measure_all_but(QfeState& s,
                                               std::span<const int> unmeasured,
                                               RngStream& rng);

}  // namespace qfe

#endif
