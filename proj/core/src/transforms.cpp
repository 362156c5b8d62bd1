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

#include "qfe/transforms.hpp"

#include <cassert>
#include <limits>

namespace qfe {

void reduce_gram_row_col(QfeState& s, int c) {
  s.Q.reduce_row_col(c);
}

void reindex_subt_column(QfeState& s, int k, int c) {
  if (k == c) return;
  assert(k >= 0 && k < s.rank() && c >= 0 && c < s.rank());

  s.A.xor_col_into(c, k);

  // Net symmetric effect of subtracting row/column c of Q from row/column k:
  //   Q[h,k] -= Q[h,c]            (h not in {c,k})
  //   Q[c,k] -= Q[c,c]
  //   Q[k,k] -= 2 Q[k,c] - Q[c,c]
  // evaluated on the original entries.
  const int qcc = s.Q.diag(c);
  const int qkc = s.Q.get(k, c);
  for (auto [h, v] : s.Q.row_offdiag(c)) {
    if (h != k) s.Q.add_sym(h, k, -v);
  }
  s.Q.add_sym(c, k, -qcc);
  s.Q.add_diag(k, -2 * qkc + qcc);
  reduce_gram_row_col(s, k);
}

void reindex_swap_columns(QfeState& s, int k, int c) {
  if (k == c) return;
  assert(k >= 0 && k < static_cast<int>(s.p.size()));
  assert(c >= 0 && c < static_cast<int>(s.p.size()));
  s.A.swap_cols(c, k);
  s.Q.swap_dims(c, k);
  std::swap(s.p[c], s.p[k]);
}

void make_principal(QfeState& s, int c, int j) {
  if (s.A.get(j, c) == 0) return;
  for (int k : s.A.row_cols(j)) {
    if (k != c) reindex_subt_column(s, k, c);
  }
  s.p[c] = j;
}

void reselect_principal_row(QfeState& s, std::optional<int> excluded, int c) {
  int best = -1;
  int best_count = std::numeric_limits<int>::max();
  s.A.for_each_in_col(c, [&](int j) {
    if (excluded && j == *excluded) return;
    const int count = s.A.row_count(j);
    if (count < best_count || (count == best_count && j < best)) {
      best = j;
      best_count = count;
    }
  });
  if (best >= 0) make_principal(s, c, best);
}

void fix_final_bit(QfeState& s, int z) {
  const int r = s.rank();
  if (r < 1) throw std::invalid_argument("fix_final_bit requires rank >= 1");
  assert(z == 0 || z == 1);
  const int last = r - 1;

  const std::vector<int> a = s.A.col_rows(last);
  const std::vector<std::pair<int, int>> q = s.Q.row_offdiag(last);
  const int u = s.Q.diag(last);

  s.A.remove_col(last);
  s.Q.remove_dim(last);
  s.p.pop_back();

  if (z) {
    for (auto [h, v] : q) s.Q.set_diag(h, mod4(s.Q.diag(h) + 2 * v));
    for (int j : a) s.b[j] ^= 1;
  }
  s.g = mod8(s.g + 2 * z * u);
}

void zero_column_elim(QfeState& s, int c) {
  const int cols = s.rank();
  assert(c >= 0 && c < cols);
  assert(s.A.col_count(c) == 0);

  // The Gram row that will be folded away is row c (about to be swapped to
  // the back). Reject the super- or null-normalised case before mutating.
  if (s.Q.diag(c) % 2 == 0 && s.Q.offdiag_count(c) == 0) {
    throw NonNormalisedState();
  }

  const int last = cols - 1;
  reindex_swap_columns(s, c, last);

  const std::vector<std::pair<int, int>> q = s.Q.row_offdiag(last);
  const int u = mod4(s.Q.diag(last));

  s.A.remove_col(last);
  s.Q.remove_dim(last);
  s.p.pop_back();

  if (u % 2 == 1) {
    // Q += (u-2) q q^T, then reduce the touched lines.
    for (std::size_t i = 0; i < q.size(); ++i) {
      const auto [h, vh] = q[i];
      s.Q.add_diag(h, (u - 2) * vh * vh);
      for (std::size_t t = i + 1; t < q.size(); ++t) {
        const auto [h2, vh2] = q[t];
        s.Q.add_sym(h, h2, (u - 2) * vh * vh2);
      }
    }
    for (auto [h, vh] : q) {
      (void)vh;
      reduce_gram_row_col(s, h);
    }
    s.g = mod8(s.g - u + 2);
    return;
  }

  // Even corner: q is nonzero here. Reduce it to a unit vector, move the
  // unit position to the back, and fix that index to u/2.
  int ell = -1;
  for (auto [h, v] : q) {
    if (v % 2 == 1) {
      ell = h;
      break;
    }
  }
  assert(ell >= 0);
  for (auto [k, v] : q) {
    if (k != ell && v % 2 == 1) reindex_subt_column(s, k, ell);
  }
  reindex_swap_columns(s, s.rank() - 1, ell);
  fix_final_bit(s, u / 2);
}

}  // namespace qfe
