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

#ifndef QFE_COSIM_HPP
#define QFE_COSIM_HPP

#include <cstdint>

#include "qfe/circuit.hpp"
#include "qfe/oracle.hpp"

namespace qfe {

/// Lock-step execution of one shot on both simulators. The quadratic form
/// side draws every random outcome; the dense side consumes the recorded
/// outcome through its forced-measurement entry points. After each
/// instruction the amplitudes (global phase included) are compared and the
/// worst deviation is kept.
class CoSimulator {
 public:
  CoSimulator(int n, std::uint64_t rng_seed);

  /// Applies one instruction to both sides and compares. Returns the
  /// measurement outcome for measuring instructions, -1 otherwise.
  int step(const Instruction& ins);

  /// Runs a whole circuit (one shot). Returns the max deviation seen.
  double run(const Circuit& circuit);

  double max_deviation() const { return max_deviation_; }
  QfeState& qfe() { return qfe_; }
  DenseState& dense() { return dense_; }
  RngStream& rng() { return rng_; }

  /// Test hook: deliberately corrupts the dense side so that the
  /// comparison harness must report a failure.
  void corrupt();

 private:
  QfeState qfe_;
  DenseState dense_;
  RngStream rng_;
  double max_deviation_ = 0;
};

}  // namespace qfe

#endif
