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

#include <cassert>

#include "qfe/transforms.hpp"

namespace qfe {

namespace {

void check_qubit(const QfeState& s, int j) {
  assert(j >= 0 && j < s.n);
  (void)s;
  (void)j;
}

void check_distinct(const QfeState& s, int a, int b, const char* gate) {
  check_qubit(s, a);
  check_qubit(s, b);
  if (a == b) {
    throw std::invalid_argument(std::string(gate) +
                                ": identical control and target");
  }
}

}  // namespace

void apply_x(QfeState& s, int j) {
  check_qubit(s, j);
  s.b[j] ^= 1;
}

void apply_z(QfeState& s, int j) {
  check_qubit(s, j);
  s.g = mod8(s.g + 4 * s.b[j]);
  s.A.for_each_in_row(
      j, [&](int k) { s.Q.set_diag(k, mod4(s.Q.diag(k) + 2)); });
}

void apply_y(QfeState& s, int j) {
  check_qubit(s, j);
  s.g = mod8(s.g + 2);
  apply_z(s, j);
  apply_x(s, j);
}

void apply_s(QfeState& s, int j) {
  check_qubit(s, j);
  const std::vector<int> a = s.A.row_cols(j);
  const int sigma = 1 - 2 * s.b[j];
  for (std::size_t i = 0; i < a.size(); ++i) {
    s.Q.add_diag(a[i], sigma);
    for (std::size_t t = i + 1; t < a.size(); ++t) {
      s.Q.add_sym(a[i], a[t], sigma);
    }
  }
  for (int k : a) reduce_gram_row_col(s, k);
  s.g = mod8(s.g + 2 * s.b[j]);
}

void apply_sdg(QfeState& s, int j) {
  apply_s(s, j);
  apply_s(s, j);
  apply_s(s, j);
}

void apply_cz(QfeState& s, int j, int k) {
  check_distinct(s, j, k, "CZ");
  const std::vector<int> aj = s.A.row_cols(j);
  const std::vector<int> ak = s.A.row_cols(k);
  // Q += a_j a_k^T + a_k a_j^T + 2 diag(b_k a_j^T + b_j a_k^T)
  for (int x : aj) {
    for (int y : ak) {
      if (x == y) {
        s.Q.add_diag(x, 2);
      } else {
        s.Q.add_sym(x, y, 1);
      }
    }
  }
  if (s.b[k]) {
    for (int x : aj) s.Q.add_diag(x, 2);
  }
  if (s.b[j]) {
    for (int y : ak) s.Q.add_diag(y, 2);
  }
  for (int x : aj) reduce_gram_row_col(s, x);
  for (int y : ak) reduce_gram_row_col(s, y);
  s.g = mod8(s.g + 4 * s.b[j] * s.b[k]);
}

void apply_cx(QfeState& s, int control, int target) {
  check_distinct(s, control, target, "CX");
  const std::optional<int> c = s.principal_column_of_row(target);
  for (int k : s.A.row_cols(control)) s.A.toggle(target, k);
  s.b[target] ^= s.b[control];
  if (c) reselect_principal_row(s, std::nullopt, *c);
}

void apply_h(QfeState& s, int j) {
  check_qubit(s, j);
  int c = s.principal_column_of_row(j).value_or(-1);
  if (c >= 0) {
    reselect_principal_row(s, j, c);
    if (s.p[c] != j) c = -1;
  }
  const int r = s.rank();
  const std::vector<int> a_tilde = s.A.row_cols(j);

  for (int k : a_tilde) s.A.set(j, k, 0);
  s.A.append_col();
  s.A.set(j, r, 1);
  s.p.push_back(j);

  s.Q.append_dim();
  for (int k : a_tilde) s.Q.set_sym(k, r, 1);
  s.Q.set_diag(r, 2 * s.b[j]);
  s.b[j] = 0;

  if (c >= 0) zero_column_elim(s, c);
}

void apply_cy(QfeState& s, int control, int target) {
  check_distinct(s, control, target, "CY");
  apply_cz(s, control, target);
  apply_cx(s, control, target);
  apply_s(s, control);
}

}  // namespace qfe
