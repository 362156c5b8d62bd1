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

#include "qfe/oracle.hpp"

#include <complex>
#include <functional>

#include "doctest.h"

using namespace qfe;
using cd = std::complex<double>;

namespace {

// Dense 2^n x 2^n matrix of a gate, recovered column by column from its
// action on basis states; used once to certify unitarity.
std::vector<std::vector<cd>> gate_matrix(
    int n, const std::function<void(DenseState&)>& apply) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::vector<cd>> cols;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int j = 0; j < n; ++j) bits[j] = (c >> j) & 1;
    DenseState st = DenseState::basis(bits);
    apply(st);
    cols.push_back(st.amplitudes());
  }
  return cols;
}

bool is_unitary(const std::vector<std::vector<cd>>& cols) {
  const std::size_t dim = cols.size();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      cd dot = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        dot += std::conj(cols[a][i]) * cols[b][i];
      }
      const cd expected = a == b ? cd(1, 0) : cd(0, 0);
      if (std::abs(dot - expected) > 1e-12) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("gate matrices are unitary") {
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_x(0); })));
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_y(0); })));
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_z(0); })));
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_h(0); })));
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_s(0); })));
  CHECK(is_unitary(gate_matrix(1, [](DenseState& s) { s.apply_sdg(0); })));
  CHECK(is_unitary(gate_matrix(2, [](DenseState& s) { s.apply_cz(0, 1); })));
  CHECK(is_unitary(gate_matrix(2, [](DenseState& s) { s.apply_cx(0, 1); })));
  CHECK(is_unitary(gate_matrix(2, [](DenseState& s) { s.apply_cy(0, 1); })));
}

TEST_CASE("literal gate actions") {
  DenseState st(1);
  st.apply_x(0);
  CHECK(std::abs(st.amplitudes()[1] - cd(1, 0)) < 1e-15);

  DenseState h(1);
  h.apply_h(0);
  CHECK(std::abs(h.amplitudes()[0] - cd(1 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(h.amplitudes()[1] - cd(1 / std::sqrt(2.0), 0)) < 1e-15);

  DenseState s1 = DenseState::basis({1});
  s1.apply_s(0);
  CHECK(std::abs(s1.amplitudes()[1] - cd(0, 1)) < 1e-15);

  DenseState y = DenseState::basis({0});
  y.apply_y(0);
  CHECK(std::abs(y.amplitudes()[1] - cd(0, 1)) < 1e-15);
}

TEST_CASE("forced measurements project with the sqrt(2) convention") {
  // Z on |+>, beta = 1: probability 1/2, post-state |1>
  DenseState plus(1);
  plus.apply_h(0);
  const double p = plus.measure_forced(0, Basis::Z, 1);
  CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(plus.amplitudes()[1] - cd(1, 0)) < 1e-12);
  CHECK(std::abs(plus.amplitudes()[0]) < 1e-12);

  // X on |+>, beta = 0: probability 1, state untouched
  DenseState plus2(1);
  plus2.apply_h(0);
  const auto before = plus2.amplitudes();
  CHECK(plus2.measure_forced(0, Basis::X, 0) == doctest::Approx(1.0));
  CHECK(plus2.amplitudes() == before);

  // Y on |+i>, beta = 1: impossible outcome is rejected
  DenseState plusi(1);
  plusi.apply_h(0);
  plusi.apply_s(0);
  CHECK_THROWS_AS(plusi.measure_forced(0, Basis::Y, 1), std::logic_error);
}

TEST_CASE("norm stays 1 through gate sequences") {
  DenseState st(3);
  st.apply_h(0);
  st.apply_cx(0, 1);
  st.apply_cy(1, 2);
  st.apply_s(2);
  st.apply_cz(0, 2);
  CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pauli observable forced measurement") {
  // Bell state is a +1 eigenvector of Z(x)Z and X(x)X.
  DenseState bell(2);
  bell.apply_h(0);
  bell.apply_cx(0, 1);
  PauliString zz;
  zz.factors = {{0, PauliLetter::Z}, {1, PauliLetter::Z}};
  CHECK(bell.measure_pauli_forced(zz, 0) == doctest::Approx(1.0));
  PauliString xx;
  xx.factors = {{0, PauliLetter::X}, {1, PauliLetter::X}};
  CHECK(bell.measure_pauli_forced(xx, 0) == doctest::Approx(1.0));

  // |00> measured in X(x)X: both outcomes probability 1/2.
  DenseState zero(2);
  CHECK(zero.measure_pauli_forced(xx, 1) == doctest::Approx(0.5));
  CHECK(zero.norm() == doctest::Approx(1.0));
}
