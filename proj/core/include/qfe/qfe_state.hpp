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

#ifndef QFE_QFE_STATE_HPP
#define QFE_QFE_STATE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfe/sparse_gf2.hpp"

namespace qfe {

/// Thrown when expanding a state whose rank exceeds the configured cap.
class ExpansionCapExceeded : public std::runtime_error {
 public:
  ExpansionCapExceeded(int required, int cap)
      : std::runtime_error("amplitude expansion refused: rank " +
                           std::to_string(required) + " exceeds cap " +
                           std::to_string(cap)),
        required_rank(required) {}
  int required_rank;
};

/// An n-qubit stabiliser state held as a quadratic form expansion
///
///   |psi> = tau^g 2^{-r/2} sum_{x in {0,1}^r} i^{x^T Q x} |Ax (+) b>,
///
/// with tau = exp(i pi/4), A an n x r GF(2) matrix in principal row form,
/// Q a symmetric Gram matrix (diagonal mod 4, off-diagonals mod 2), b a bit
/// vector and p the principal index map assigning each column its unit row.
///
/// The rank r is not stored separately: it always equals A.cols(). Composite
/// operations may let the column count stray from full rank between their
/// internal steps, but every public operation leaves the invariants intact.
struct QfeState {
  int n = 0;
  int g = 0;  // phase exponent, kept reduced mod 8
  SparseBinaryMatrix A;
  SparseGramMatrix Q;
  std::vector<std::uint8_t> b;
  std::vector<std::int32_t> p;  // p[c] = principal row of column c

  /// |b> with no superposition. Rejects n = 0.
  static QfeState basis_state(const std::vector<std::uint8_t>& bits);

  /// |0...0> on n qubits.
  static QfeState zero_state(int n);

  QfeState clone() const { return *this; }

  int rank() const { return A.cols(); }

  /// True when row j is the designated principal row of some column, which
  /// is then reported. O(1) via the row count and the index map.
  std::optional<int> principal_column_of_row(int j) const;

  /// Checks every structural invariant, including a full GF(2) rank
  /// computation; reports the first violation instead of asserting.
  std::optional<std::string> validate() const;

  /// The 2^n complex amplitudes of the state. Refuses when rank() > cap.
  std::vector<std::complex<double>> amplitudes(int cap = 22) const;

  /// Line-oriented text dump with stable ordering, for golden tests.
  std::string debug_dump() const;

  std::uint64_t touches() const { return A.touches() + Q.touches(); }
  void reset_touches() {
    A.reset_touches();
    Q.reset_touches();
  }

 private:
  QfeState(int n_, SparseBinaryMatrix A_, SparseGramMatrix Q_)
      : n(n_), A(std::move(A_)), Q(std::move(Q_)) {}
};

inline int mod2(int x) { return ((x % 2) + 2) % 2; }
inline int mod4(int x) { return ((x % 4) + 4) % 4; }
inline int mod8(int x) { return ((x % 8) + 8) % 8; }

/// GF(2) rank of an arbitrary bit-row list (columns <= 64 * words).
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols);

}  // namespace qfe

#endif
