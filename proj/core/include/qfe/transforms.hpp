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

#ifndef QFE_TRANSFORMS_HPP
#define QFE_TRANSFORMS_HPP

#include <optional>
#include <stdexcept>

#include "qfe/qfe_state.hpp"

namespace qfe {

/// Raised by zero_column_elim when the eliminated column's Gram row is even
/// on the diagonal and zero elsewhere. Such input does not describe a
/// normalised state; it is rejected, never repaired.
class NonNormalisedState : public std::runtime_error {
 public:
  NonNormalisedState()
      : std::runtime_error(
            "zero_column_elim: non-normalised input (q = 0, u even)") {}
};

/// Reduces Q's diagonal entry at c mod 4 and the off-diagonals of row and
/// column c mod 2. Leaves the represented state unchanged.
void reduce_gram_row_col(QfeState& s, int c);

/// Change of variables adding column c of A into column k (mod 2), with the
/// congruent update of Q. No-op when k == c. Amplitudes are unchanged.
void reindex_subt_column(QfeState& s, int k, int c);

/// Change of variables swapping columns c and k of A, rows/columns c and k
/// of Q, and the entries p(c), p(k). Amplitudes are unchanged.
void reindex_swap_columns(QfeState& s, int k, int c);

/// If A[j,c] = 1, clears the rest of row j by column subtractions and makes
/// j the principal row of column c. If A[j,c] = 0, does nothing.
void make_principal(QfeState& s, int c, int j);

/// Picks the row j* != excluded with A[j*,c] = 1 having the fewest nonzeros
/// (ties to the smallest row index) and makes it principal for column c.
/// Does nothing when no candidate exists.
void reselect_principal_row(QfeState& s, std::optional<int> excluded, int c);

/// Realises fixing the final summation index to z: the last column of A and
/// last row/column of Q are folded into b, Q and g, and the rank drops by
/// one. The discarded 1/sqrt(2) normalisation factor is the caller's
/// responsibility; on a normalised input this yields the normalised state
/// post-selected on x_last = z. Requires rank >= 1.
void fix_final_bit(QfeState& s, int z);

/// Eliminates the all-zero column c from an A with one more column than its
/// rank, restoring full principal row form. Removes one column (odd Gram
/// corner) or two (even corner). Throws NonNormalisedState, before any
/// mutation, when the even corner comes with an all-zero Gram row.
void zero_column_elim(QfeState& s, int c);

}  // namespace qfe

#endif
