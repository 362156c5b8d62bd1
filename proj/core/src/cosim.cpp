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

#include "qfe/cosim.hpp"

#include <algorithm>

#include "qfe/gates.hpp"

namespace qfe {

CoSimulator::CoSimulator(int n, std::uint64_t rng_seed)
    : qfe_(QfeState::zero_state(n)), dense_(n), rng_(rng_seed) {}

int CoSimulator::step(const Instruction& ins) {
  int outcome = -1;
  switch (ins.op) {
    case OpCode::X:
      apply_x(qfe_, ins.q0);
      dense_.apply_x(ins.q0);
      break;
    case OpCode::Y:
      apply_y(qfe_, ins.q0);
      dense_.apply_y(ins.q0);
      break;
    case OpCode::Z:
      apply_z(qfe_, ins.q0);
      dense_.apply_z(ins.q0);
      break;
    case OpCode::H:
      apply_h(qfe_, ins.q0);
      dense_.apply_h(ins.q0);
      break;
    case OpCode::S:
      apply_s(qfe_, ins.q0);
      dense_.apply_s(ins.q0);
      break;
    case OpCode::SDG:
      apply_sdg(qfe_, ins.q0);
      dense_.apply_sdg(ins.q0);
      break;
    case OpCode::CZ:
      apply_cz(qfe_, ins.q0, ins.q1);
      dense_.apply_cz(ins.q0, ins.q1);
      break;
    case OpCode::CX:
      apply_cx(qfe_, ins.q0, ins.q1);
      dense_.apply_cx(ins.q0, ins.q1);
      break;
    case OpCode::CY:
      apply_cy(qfe_, ins.q0, ins.q1);
      dense_.apply_cy(ins.q0, ins.q1);
      break;
    case OpCode::MZ:
      outcome = measure_z(qfe_, ins.q0, rng_);
      dense_.measure_forced(ins.q0, Basis::Z, outcome);
      break;
    case OpCode::MX:
      outcome = measure_x(qfe_, ins.q0, rng_);
      dense_.measure_forced(ins.q0, Basis::X, outcome);
      break;
    case OpCode::MY:
      outcome = measure_y(qfe_, ins.q0, rng_);
      dense_.measure_forced(ins.q0, Basis::Y, outcome);
      break;
    case OpCode::MPP:
      outcome = measure_pauli(qfe_, ins.pauli, ins.q0, rng_);
      dense_.measure_pauli_forced(ins.pauli, outcome);
      break;
  }
  max_deviation_ = std::max(max_deviation_, DenseState::compare(dense_, qfe_));
  return outcome;
}

double CoSimulator::run(const Circuit& circuit) {
  for (const auto& ins : circuit.ops) step(ins);
  return max_deviation_;
}

void CoSimulator::corrupt() { dense_.apply_x(0); }

}  // namespace qfe
