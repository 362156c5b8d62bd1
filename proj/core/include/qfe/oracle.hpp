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

#ifndef QFE_ORACLE_HPP
#define QFE_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qfe/measure.hpp"
#include "qfe/pauli_obs.hpp"
#include "qfe/qfe_state.hpp"

namespace qfe {

/// Brute-force dense state-vector simulator, the reference every other
/// module is checked against. Applies gate matrices literally; nothing here
/// is clever on purpose. Basis index bit 0 is qubit 0 (least significant).
class DenseState {
 public:
  static constexpr int kDefaultQubitCap = 14;

  explicit DenseState(int n, int qubit_cap = kDefaultQubitCap);
  static DenseState basis(const std::vector<std::uint8_t>& bits,
                          int qubit_cap = kDefaultQubitCap);

  int qubit_count() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  double norm() const;

  void apply_x(int j);
  void apply_y(int j);
  void apply_z(int j);
  void apply_h(int j);
  void apply_s(int j);
  void apply_sdg(int j);
  void apply_cz(int j, int k);
  void apply_cx(int control, int target);
  void apply_cy(int control, int target);

  /// Forces the single-qubit measurement outcome `beta`: returns its
  /// probability, which must be 0, 1/2 or 1 on a stabiliser state (anything
  /// else raises an internal-consistency error). Probability 1/2 projects
  /// and rescales by sqrt(2); probability 1 leaves the state untouched;
  /// probability 0 raises — the caller fed an impossible outcome.
  double measure_forced(int j, Basis basis, int beta);

  /// Same contract for a multi-qubit Pauli observable (outcome bit
  /// 0 <-> eigenvalue +1).
  double measure_pauli_forced(const PauliString& pauli, int beta);

  /// Max absolute amplitude difference against a quadratic form expansion.
  /// Global phase is not quotiented out.
  static double compare(const DenseState& dense, const QfeState& qfe);

 private:
  void project(const std::vector<std::complex<double>>& projected, double p);

  int n_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace qfe

#endif
