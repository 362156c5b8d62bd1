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

#include "qfe/measure.hpp"

#include <cassert>
#include <limits>

#include "qfe/transforms.hpp"

namespace qfe {

namespace {

// Shared tail of the X- and Y-measurement procedures: zero row j of A,
// adjoin the column e_j with p(new) = j, extend Q by a zero row/column, and
// clear b_j. Returns the snapshot of row j taken before clearing.
std::vector<int> hollow_out_row(QfeState& s, int j) {
  const int r = s.rank();
  const std::vector<int> a_tilde = s.A.row_cols(j);
  for (int k : a_tilde) s.A.set(j, k, 0);
  s.A.append_col();
  s.A.set(j, r, 1);
  s.p.push_back(j);
  s.Q.append_dim();
  return a_tilde;
}

}  // namespace

int measure_z(QfeState& s, int j, RngStream& rng) {
  assert(j >= 0 && j < s.n);
  if (s.A.row_count(j) == 0) return s.b[j];

  const int beta = rng.next_bit();
  // Pivot on the nonzero of row j whose column is cheapest to clear.
  int k = -1;
  int k_count = std::numeric_limits<int>::max();
  s.A.for_each_in_row(j, [&](int col) {
    const int count = s.A.col_count(col);
    if (count < k_count) {
      k = col;
      k_count = count;
    }
  });
  reindex_swap_columns(s, k, s.rank() - 1);
  make_principal(s, s.rank() - 1, j);
  fix_final_bit(s, beta ^ s.b[j]);
  return beta;
}

int measure_x(QfeState& s, int j, RngStream& rng) {
  assert(j >= 0 && j < s.n);
  std::optional<int> c = s.principal_column_of_row(j);
  if (c) {
    reselect_principal_row(s, j, *c);
    if (s.p[*c] != j) c.reset();
  }

  int beta;
  if (c && s.Q.offdiag_count(*c) == 0) {
    // Qubit j is unentangled and in an X- or Y-eigenstate.
    const int qcc = s.Q.diag(*c);
    if (qcc % 2 == 0) {
      return qcc / 2;  // X-eigenstate: outcome forced, state untouched
    }
    // Y-eigenstate: uniformly random X outcome. The projection leaves
    // |x_beta> on qubit j and a global factor tau^{+-1}.
    const int d = (qcc - 1) / 2;
    beta = rng.next_bit();
    s.Q.set_diag(*c, 2 * beta);
    s.g = mod8(s.g + (beta == d ? 1 : -1));
    return beta;
  }
  beta = rng.next_bit();

  const int b_j = s.b[j];
  const int r = s.rank();
  const std::vector<int> a_tilde = hollow_out_row(s, j);
  if (beta) {
    for (int k : a_tilde) s.Q.set_diag(k, mod4(s.Q.diag(k) + 2));
    s.Q.set_diag(r, 2);
  }
  s.b[j] = 0;
  s.g = mod8(s.g - 4 * beta * b_j);

  if (c) zero_column_elim(s, *c);
  return beta;
}

int measure_y(QfeState& s, int j, RngStream& rng) {
  assert(j >= 0 && j < s.n);
  std::optional<int> c = s.principal_column_of_row(j);
  if (c) {
    reselect_principal_row(s, j, *c);
    if (s.p[*c] != j) c.reset();
  }

  int beta;
  if (c && s.Q.offdiag_count(*c) == 0) {
    const int qcc = s.Q.diag(*c);
    if (qcc % 2 == 1) {
      return ((qcc - 1) / 2) ^ s.b[j];  // Y-eigenstate: forced outcome
    }
    // X-eigenstate: uniformly random Y outcome; the projection leaves
    // |y_beta> on qubit j up to a tracked global factor.
    const int d = qcc / 2;
    beta = rng.next_bit();
    s.g = mod8(s.g + 4 * d * s.b[j] + (beta == d ? -1 : 1));
    s.b[j] = 0;
    s.Q.set_diag(*c, 2 * beta + 1);
    return beta;
  }
  beta = rng.next_bit();

  const int b_j = s.b[j];
  const int r = s.rank();
  const std::vector<int> a_tilde = hollow_out_row(s, j);
  // Q += (2 b_j + 2 beta - 1) a~ a~^T + (2 beta + 1) e e^T
  const int sigma = 2 * b_j + 2 * beta - 1;
  for (std::size_t i = 0; i < a_tilde.size(); ++i) {
    s.Q.add_diag(a_tilde[i], sigma);
    for (std::size_t t = i + 1; t < a_tilde.size(); ++t) {
      s.Q.add_sym(a_tilde[i], a_tilde[t], sigma);
    }
  }
  s.Q.set_diag(r, 2 * beta + 1);
  for (int k : a_tilde) reduce_gram_row_col(s, k);
  s.b[j] = 0;
  s.g = mod8(s.g - (4 * beta + 2) * b_j);

  if (c) zero_column_elim(s, *c);
  return beta;
}

int measure(QfeState& s, int j, Basis basis, RngStream& rng) {
  switch (basis) {
    case Basis::X:
      return measure_x(s, j, rng);
    case Basis::Y:
      return measure_y(s, j, rng);
    case Basis::Z:
      return measure_z(s, j, rng);
  }
  return 0;
}

std::optional<int> peek_deterministic(const QfeState& s, int j, Basis basis) {
  assert(j >= 0 && j < s.n);
  if (basis == Basis::Z) {
    if (s.A.row_count(j) == 0) return s.b[j];
    return std::nullopt;
  }
  // The measurement can be forced only if qubit j is unentangled and not in
  // a Z-eigenstate: row j holds a lone principal column whose Gram row is
  // purely diagonal.
  const std::optional<int> c = s.principal_column_of_row(j);
  if (!c || s.A.col_count(*c) != 1 || s.Q.offdiag_count(*c) != 0) {
    return std::nullopt;
  }
  const int qcc = s.Q.diag(*c);
  if (basis == Basis::X) {
    if (qcc % 2 == 0) return qcc / 2;
    return std::nullopt;
  }
  if (qcc % 2 == 1) return ((qcc - 1) / 2) ^ s.b[j];
  return std::nullopt;
}

}  // namespace qfe
