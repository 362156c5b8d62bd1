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

#ifndef QFE_PAULI_OBS_HPP
#define QFE_PAULI_OBS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qfe/measure.hpp"
#include "qfe/qfe_state.hpp"

namespace qfe {

enum class PauliLetter { X, Y, Z };

/// A multi-qubit Pauli observable: one letter per distinct qubit, k >= 1.
struct PauliString {
  std::vector<std::pair<int, PauliLetter>> factors;

  int weight() const { return static_cast<int>(factors.size()); }

  /// Range/distinctness validation against an n-qubit register; returns the
  /// first problem found.
  std::optional<std::string> validate(int n) const;
};

/// Measures the observable P by an ancilla phase kick: the ancilla (which
/// must be a basis-state qubit disentangled from the rest, off P's support)
/// is borrowed, driven through H, controlled-P and an X-basis readout, and
/// restored to its recorded basis value. Returns the outcome bit with
/// 0 <-> eigenvalue +1. The post-state equals the direct P-measurement of
/// the state at the same outcome, sqrt(2)-renormalised when random.
///
/// Preconditions are checked before any mutation; violations throw
/// std::invalid_argument.
int measure_pauli(QfeState& s, const PauliString& pauli, int ancilla,
                  RngStream& rng);

/// Clone-probe query: runs measure_pauli on clones with both forced rng
/// bits; equal outcomes mean the measurement is deterministic with that
/// outcome. The input state is never modified.
std::optional<int> is_deterministic_pauli(const QfeState& s,
                                          const PauliString& pauli,
                                          int ancilla);

}  // namespace qfe

#endif
