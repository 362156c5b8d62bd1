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

#include "qfe/gates.hpp"

#include "doctest.h"
#include "qfe/cosim.hpp"
#include "support/test_helpers.hpp"

using namespace qfe;
using qfe::test::max_amp_deviation;
using qfe::test::random_state;
using cd = std::complex<double>;

TEST_CASE("pauli gate examples") {
  QfeState s = QfeState::zero_state(1);
  apply_x(s, 0);
  CHECK(s.b[0] == 1);
  apply_x(s, 0);
  CHECK(s.debug_dump() == QfeState::zero_state(1).debug_dump());

  // Z on |1>: phase -1 (g = 4)
  QfeState one = QfeState::basis_state({1});
  apply_z(one, 0);
  CHECK(one.g == 4);

  // Z twice is the identity
  apply_z(one, 0);
  CHECK(one.g == 0);

  // Z on |+> flips to |->
  QfeState plus = QfeState::zero_state(1);
  apply_h(plus, 0);
  apply_z(plus, 0);
  CHECK(plus.Q.diag(0) == 2);
  const auto amps = plus.amplitudes();
  CHECK(std::abs(amps[0] - cd(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(amps[1] - cd(-1 / std::sqrt(2.0), 0)) < 1e-12);

  // Y on |0> = i|1>, Y on |1> = -i|0>
  QfeState y0 = QfeState::zero_state(1);
  apply_y(y0, 0);
  CHECK(y0.b[0] == 1);
  CHECK(y0.g == 2);
  QfeState y1 = QfeState::basis_state({1});
  apply_y(y1, 0);
  CHECK(y1.b[0] == 0);
  CHECK(y1.g == 6);
}

TEST_CASE("S gate examples") {
  // S on qubit 1 of |++> gives the psi1 Gram matrix diag(0, 1).
  QfeState s = QfeState::zero_state(2);
  apply_h(s, 0);
  apply_h(s, 1);
  apply_s(s, 1);
  CHECK(s.Q.diag(0) == 0);
  CHECK(s.Q.diag(1) == 1);
  CHECK(s.Q.offdiag_count(0) == 0);

  // S on |1>: global phase i
  QfeState one = QfeState::basis_state({1});
  apply_s(one, 0);
  CHECK(one.g == 2);
}

TEST_CASE("CZ gate examples") {
  QfeState s = QfeState::zero_state(2);
  apply_h(s, 0);
  apply_h(s, 1);
  apply_cz(s, 0, 1);
  CHECK(s.Q.get(0, 1) == 1);
  CHECK(s.Q.diag(0) == 0);
  CHECK(s.Q.diag(1) == 0);

  QfeState ones = QfeState::basis_state({1, 1});
  apply_cz(ones, 0, 1);
  CHECK(ones.g == 4);

  QfeState same = QfeState::zero_state(2);
  CHECK_THROWS_AS(apply_cz(same, 1, 1), std::invalid_argument);
}

TEST_CASE("CX gate examples") {
  // CX on |+0> builds the Bell pair: A = [1;1]
  QfeState bell = QfeState::zero_state(2);
  apply_h(bell, 0);
  apply_cx(bell, 0, 1);
  CHECK(bell.rank() == 1);
  CHECK(bell.A.col_rows(0) == std::vector<int>{0, 1});

  // CX on |10> -> |11>, pure b update
  QfeState basis = QfeState::basis_state({1, 0});
  apply_cx(basis, 0, 1);
  CHECK(basis.rank() == 0);
  CHECK(basis.b == std::vector<std::uint8_t>{1, 1});

  QfeState same = QfeState::zero_state(2);
  CHECK_THROWS_AS(apply_cx(same, 0, 0), std::invalid_argument);
}

TEST_CASE("H gate examples") {
  QfeState plus = QfeState::zero_state(1);
  apply_h(plus, 0);
  CHECK(plus.rank() == 1);
  CHECK(plus.A.get(0, 0) == 1);
  CHECK(plus.Q.diag(0) == 0);

  QfeState minus = QfeState::basis_state({1});
  apply_h(minus, 0);
  CHECK(minus.Q.diag(0) == 2);
  CHECK(minus.b[0] == 0);
}

TEST_CASE("CY examples") {
  // CY |10> = i|11>
  QfeState s = QfeState::basis_state({1, 0});
  apply_cy(s, 0, 1);
  const auto amps = s.amplitudes();
  CHECK(std::abs(amps[0b11] - cd(0, 1)) < 1e-12);

  // control off: state unchanged
  QfeState off = QfeState::basis_state({0, 1});
  apply_cy(off, 0, 1);
  const auto amps_off = off.amplitudes();
  CHECK(std::abs(amps_off[0b10] - cd(1, 0)) < 1e-12);

  QfeState same = QfeState::zero_state(2);
  CHECK_THROWS_AS(apply_cy(same, 1, 1), std::invalid_argument);
}

TEST_CASE("every gate matches the dense oracle on random states") {
  struct GateCase {
    OpCode op;
    int arity;
  };
  const GateCase cases[] = {
      {OpCode::X, 1},  {OpCode::Y, 1},  {OpCode::Z, 1},
      {OpCode::H, 1},  {OpCode::S, 1},  {OpCode::SDG, 1},
      {OpCode::CZ, 2}, {OpCode::CX, 2}, {OpCode::CY, 2},
  };
  for (const auto& gate : cases) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int n = 5;
      CoSimulator co(n, seed);
      // scramble
      const Circuit warmup = random_circuit(n, 25, seed * 977 + 3,
                                            /*with_measurements=*/false);
      for (const auto& ins : warmup.ops) co.step(ins);
      Instruction probe;
      probe.op = gate.op;
      std::mt19937_64 gen(seed + 11);
      probe.q0 = static_cast<int>(gen() % n);
      if (gate.arity == 2) {
        do {
          probe.q1 = static_cast<int>(gen() % n);
        } while (probe.q1 == probe.q0);
      }
      co.step(probe);
      REQUIRE(!co.qfe().validate());
      CHECK(co.max_deviation() < 1e-9);
    }
  }
}

TEST_CASE("unitarity round trips") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    QfeState s = random_state(4, 25, seed * 7 + 1);
    const auto before = s.amplitudes();
    std::mt19937_64 gen(seed);
    const int j = static_cast<int>(gen() % 4);
    int k = static_cast<int>(gen() % 4);
    if (k == j) k = (k + 1) % 4;

    QfeState t = s.clone();
    apply_x(t, j);
    apply_x(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_y(t, j);
    apply_y(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_z(t, j);
    apply_z(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_h(t, j);
    apply_h(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    for (int rep = 0; rep < 4; ++rep) apply_s(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_cz(t, j, k);
    apply_cz(t, j, k);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_cx(t, j, k);
    apply_cx(t, j, k);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_cy(t, j, k);
    apply_cy(t, j, k);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);

    t = s.clone();
    apply_sdg(t, j);
    apply_s(t, j);
    CHECK(max_amp_deviation(before, t.amplitudes()) < 1e-9);
  }
}

TEST_CASE("group relations") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    QfeState s = random_state(4, 25, seed * 13 + 5);
    std::mt19937_64 gen(seed);
    const int j = static_cast<int>(gen() % 4);
    int k = static_cast<int>(gen() % 4);
    if (k == j) k = (k + 1) % 4;

    // HZH = X
    QfeState lhs = s.clone();
    apply_h(lhs, j);
    apply_z(lhs, j);
    apply_h(lhs, j);
    QfeState rhs = s.clone();
    apply_x(rhs, j);
    CHECK(max_amp_deviation(lhs.amplitudes(), rhs.amplitudes()) < 1e-9);

    // S^2 = Z
    lhs = s.clone();
    apply_s(lhs, j);
    apply_s(lhs, j);
    rhs = s.clone();
    apply_z(rhs, j);
    CHECK(max_amp_deviation(lhs.amplitudes(), rhs.amplitudes()) < 1e-9);

    // CX(h,j) = H_j CZ(h,j) H_j
    lhs = s.clone();
    apply_h(lhs, k);
    apply_cz(lhs, j, k);
    apply_h(lhs, k);
    rhs = s.clone();
    apply_cx(rhs, j, k);
    CHECK(max_amp_deviation(lhs.amplitudes(), rhs.amplitudes()) < 1e-9);
  }
}

TEST_CASE("gate touch costs stay local to the named lines") {
  // X is O(1); Z touches s_j diagonal slots; on a fat GHZ state none of
  // them may scale with how many untouched qubits exist.
  std::uint64_t base_x = 0, base_z = 0, base_s = 0, base_cz = 0;
  for (int exp : {5, 10}) {
    const int n = 1 << exp;
    QfeState s = QfeState::zero_state(n);
    apply_h(s, 0);
    for (int j = 1; j < n - 2; ++j) apply_cx(s, j - 1, j);
    apply_h(s, n - 1);

    QfeState tx = s.clone();
    tx.reset_touches();
    apply_x(tx, 2);
    if (base_x == 0) {
      base_x = tx.touches() + 1;
    } else {
      CHECK(tx.touches() + 1 == base_x);
    }

    QfeState tz = s.clone();
    tz.reset_touches();
    apply_z(tz, 2);
    if (base_z == 0) {
      base_z = tz.touches() + 1;
    } else {
      CHECK(tz.touches() + 1 == base_z);
    }

    QfeState ts = s.clone();
    ts.reset_touches();
    apply_s(ts, 2);
    if (base_s == 0) {
      base_s = ts.touches() + 1;
    } else {
      CHECK(ts.touches() + 1 == base_s);
    }

    QfeState tcz = s.clone();
    tcz.reset_touches();
    apply_cz(tcz, 2, n - 1);
    if (base_cz == 0) {
      base_cz = tcz.touches() + 1;
    } else {
      CHECK(tcz.touches() + 1 == base_cz);
    }
  }
}
