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

#include "qfe/pauli_obs.hpp"

#include <algorithm>

#include "qfe/gates.hpp"

namespace qfe {

std::optional<std::string> PauliString::validate(int n) const {
  if (factors.empty()) return std::string("empty Pauli string");
  std::vector<int> qubits;
  for (auto [q, letter] : factors) {
    (void)letter;
    if (q < 0 || q >= n) {
      return "Pauli qubit " + std::to_string(q) + " out of range";
    }
    qubits.push_back(q);
  }
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    return std::string("Pauli string repeats a qubit");
  }
  return std::nullopt;
}

int measure_pauli(QfeState& s, const PauliString& pauli, int ancilla,
                  RngStream& rng) {
  if (auto err = pauli.validate(s.n)) throw std::invalid_argument(*err);
  if (ancilla < 0 || ancilla >= s.n) {
    throw std::invalid_argument("ancilla index out of range");
  }
  for (auto [q, letter] : pauli.factors) {
    (void)letter;
    if (q == ancilla) {
      throw std::invalid_argument("ancilla lies inside the observable");
    }
  }
  if (s.A.row_count(ancilla) != 0) {
    throw std::invalid_argument(
        "ancilla is not a disentangled basis-state qubit");
  }

  const int prior = s.b[ancilla];
  if (prior) apply_x(s, ancilla);
  apply_h(s, ancilla);
  for (auto [q, letter] : pauli.factors) {
    switch (letter) {
      case PauliLetter::X:
        apply_cx(s, ancilla, q);
        break;
      case PauliLetter::Y:
        apply_cy(s, ancilla, q);
        break;
      case PauliLetter::Z:
        apply_cz(s, ancilla, q);
        break;
    }
  }
  const int beta = measure_x(s, ancilla, rng);
  apply_h(s, ancilla);
  if (beta != prior) apply_x(s, ancilla);
  return beta;
}

std::optional<int> is_deterministic_pauli(const QfeState& s,
                                          const PauliString& pauli,
                                          int ancilla) {
  QfeState probe0 = s.clone();
  RngStream rng0 = RngStream::constant(0);
  const int out0 = measure_pauli(probe0, pauli, ancilla, rng0);
  QfeState probe1 = s.clone();
  RngStream rng1 = RngStream::constant(1);
  const int out1 = measure_pauli(probe1, pauli, ancilla, rng1);
  if (out0 == out1) return out0;
  return std::nullopt;
}

}  // namespace qfe
