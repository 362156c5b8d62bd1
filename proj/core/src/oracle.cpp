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

#include <cmath>
#include <stdexcept>

namespace qfe {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kProbTol = 1e-9;
}  // namespace

DenseState::DenseState(int n, int qubit_cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("DenseState requires n >= 1");
  if (n > qubit_cap) {
    throw std::invalid_argument("DenseState: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(qubit_cap));
  }
  amps_.assign(std::size_t{1} << n, {0.0, 0.0});
  amps_[0] = 1.0;
}

DenseState DenseState::basis(const std::vector<std::uint8_t>& bits,
                             int qubit_cap) {
  DenseState st(static_cast<int>(bits.size()), qubit_cap);
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) idx |= std::uint64_t{1} << j;
  }
  st.amps_[0] = 0.0;
  st.amps_[idx] = 1.0;
  return st;
}

double DenseState::norm() const {
  double total = 0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void DenseState::apply_x(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }
}

void DenseState::apply_y(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) {
      const std::complex<double> a0 = amps_[i];
      const std::complex<double> a1 = amps_[i | bit];
      amps_[i] = -kI * a1;
      amps_[i | bit] = kI * a0;
    }
  }
}

void DenseState::apply_z(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] = -amps_[i];
  }
}

void DenseState::apply_h(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) {
      const std::complex<double> a0 = amps_[i];
      const std::complex<double> a1 = amps_[i | bit];
      amps_[i] = (a0 + a1) * inv_sqrt2;
      amps_[i | bit] = (a0 - a1) * inv_sqrt2;
    }
  }
}

void DenseState::apply_s(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] *= kI;
  }
}

void DenseState::apply_sdg(int j) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] *= -kI;
  }
}

void DenseState::apply_cz(int j, int k) {
  const std::uint64_t mask =
      (std::uint64_t{1} << j) | (std::uint64_t{1} << k);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void DenseState::apply_cx(int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void DenseState::apply_cy(int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      const std::complex<double> a0 = amps_[i];
      const std::complex<double> a1 = amps_[i | tbit];
      amps_[i] = -kI * a1;
      amps_[i | tbit] = kI * a0;
    }
  }
}

void DenseState::project(const std::vector<std::complex<double>>& projected,
                         double p) {
  if (std::abs(p - 1.0) < kProbTol) return;  // eigenvector: leave untouched
  if (std::abs(p - 0.5) < kProbTol) {
    const double scale = std::sqrt(2.0);
    amps_ = projected;
    for (auto& a : amps_) a *= scale;
    return;
  }
  throw std::logic_error(
      "oracle: outcome probability " + std::to_string(p) +
      " is not in {0, 1/2, 1}; state was not a stabiliser state or the "
      "forced outcome is impossible");
}

double DenseState::measure_forced(int j, Basis basis, int beta) {
  PauliString p;
  const PauliLetter letter = basis == Basis::X   ? PauliLetter::X
                             : basis == Basis::Y ? PauliLetter::Y
                                                 : PauliLetter::Z;
  p.factors = {{j, letter}};
  return measure_pauli_forced(p, beta);
}

double DenseState::measure_pauli_forced(const PauliString& pauli, int beta) {
  if (auto err = pauli.validate(n_)) throw std::invalid_argument(*err);
  // P|psi>, applied letter by letter.
  std::vector<std::complex<double>> pamps = amps_;
  for (auto [q, letter] : pauli.factors) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letter) {
      case PauliLetter::X:
        for (std::uint64_t i = 0; i < pamps.size(); ++i) {
          if (!(i & bit)) std::swap(pamps[i], pamps[i | bit]);
        }
        break;
      case PauliLetter::Y:
        for (std::uint64_t i = 0; i < pamps.size(); ++i) {
          if (!(i & bit)) {
            const std::complex<double> a0 = pamps[i];
            const std::complex<double> a1 = pamps[i | bit];
            pamps[i] = -kI * a1;
            pamps[i | bit] = kI * a0;
          }
        }
        break;
      case PauliLetter::Z:
        for (std::uint64_t i = 0; i < pamps.size(); ++i) {
          if (i & bit) pamps[i] = -pamps[i];
        }
        break;
    }
  }
  // Projector (I + (-1)^beta P)/2.
  const double sign = beta ? -1.0 : 1.0;
  double p = 0;
  for (std::uint64_t i = 0; i < pamps.size(); ++i) {
    pamps[i] = (amps_[i] + sign * pamps[i]) * 0.5;
    p += std::norm(pamps[i]);
  }
  if (p < kProbTol) {
    throw std::logic_error("oracle: forced outcome has probability 0");
  }
  project(pamps, p);
  return p;
}

double DenseState::compare(const DenseState& dense, const QfeState& qfe) {
  if (dense.n_ != qfe.n) {
    throw std::invalid_argument("compare: qubit counts differ");
  }
  const auto expanded = qfe.amplitudes();
  double max_dev = 0;
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(expanded[i] - dense.amps_[i]));
  }
  return max_dev;
}

}  // namespace qfe
