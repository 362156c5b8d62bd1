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

#include "qfe/batch.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qfe/transforms.hpp"

namespace qfe {

std::string Probability::to_fraction() const {
  if (zero) return "0";
  if (exponent == 0) return "1";
  if (exponent < 63) {
    return "1/" + std::to_string(std::uint64_t{1} << exponent);
  }
  return "1/2^" + std::to_string(exponent);
}

namespace {

struct EliminationRow {
  std::vector<std::uint64_t> bits;
  std::uint8_t rhs;
  int weight;
  int principal_col;  // -1 when the source row is not principal
};

// Solves A' x = rhs over GF(2) for the selected rows of A, consuming
// principal rows first (ascending column) and the rest greedily by fewest
// nonzeros. Returns the probability 2^-rank, or zero when inconsistent.
Probability eliminate(const QfeState& s, std::span<const int> qubits,
                      std::span<const std::uint8_t> beta) {
  if (qubits.size() != beta.size()) {
    throw std::invalid_argument("qubit and bit counts differ");
  }
  {
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate qubit in strong query");
    }
    for (int q : sorted) {
      if (q < 0 || q >= s.n) {
        throw std::invalid_argument("qubit index out of range");
      }
    }
  }

  const int r = s.rank();
  const int words = std::max((r + 63) / 64, 1);
  std::vector<EliminationRow> rows;
  rows.reserve(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const int j = qubits[i];
    EliminationRow row;
    row.bits.assign(static_cast<std::size_t>(words), 0);
    s.A.for_each_in_row(j, [&](int k) {
      row.bits[k / 64] |= std::uint64_t{1} << (k % 64);
    });
    row.rhs = static_cast<std::uint8_t>(beta[i] ^ s.b[j]);
    row.weight = s.A.row_count(j);
    row.principal_col = s.principal_column_of_row(j).value_or(-1);
    rows.push_back(std::move(row));
  }

  // Principal rows pivot in one step each; order them first, by column.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const EliminationRow& a, const EliminationRow& b) {
                     const bool ap = a.principal_col >= 0;
                     const bool bp = b.principal_col >= 0;
                     if (ap != bp) return ap;
                     if (ap) return a.principal_col < b.principal_col;
                     return false;
                   });

  int rank = 0;
  std::vector<bool> used(rows.size(), false);
  while (true) {
    // Next pivot: first unused principal row, else min-weight nonzero row.
    int pick = -1;
    int pick_weight = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].weight == 0) continue;
      if (rows[i].principal_col >= 0 && rows[i].weight == 1) {
        pick = static_cast<int>(i);
        break;
      }
      if (pick < 0 || rows[i].weight < pick_weight) {
        pick = static_cast<int>(i);
        pick_weight = rows[i].weight;
      }
    }
    if (pick < 0) break;
    used[pick] = true;
    ++rank;
    int pivot_col = -1;
    for (int w = 0; w < words && pivot_col < 0; ++w) {
      if (rows[pick].bits[w]) {
        pivot_col = w * 64 + std::countr_zero(rows[pick].bits[w]);
      }
    }
    const int pw = pivot_col / 64;
    const std::uint64_t pm = std::uint64_t{1} << (pivot_col % 64);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || !(rows[i].bits[pw] & pm)) continue;
      for (int w = 0; w < words; ++w) rows[i].bits[w] ^= rows[pick].bits[w];
      rows[i].rhs ^= rows[pick].rhs;
      int weight = 0;
      for (int w = 0; w < words; ++w) {
        weight += std::popcount(rows[i].bits[w]);
      }
      rows[i].weight = weight;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i] && rows[i].rhs) return Probability::none();  // 0 = 1
  }
  return Probability::dyadic(rank);
}

std::vector<int> complement(int n, std::span<const int> unmeasured) {
  std::vector<bool> skip(static_cast<std::size_t>(n), false);
  for (int q : unmeasured) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("qubit index out of range");
    }
    skip[q] = true;
  }
  std::vector<int> out;
  out.reserve(n);
  for (int q = 0; q < n; ++q) {
    if (!skip[q]) out.push_back(q);
  }
  return out;
}

}  // namespace

Probability strong_prob_z(const QfeState& s, std::span<const int> qubits,
                          std::span<const std::uint8_t> beta) {
  return eliminate(s, qubits, beta);
}

Probability strong_prob_all_but(const QfeState& s,
                                std::span<const int> unmeasured,
                                std::span<const std::uint8_t> beta) {
  const std::vector<int> measured = complement(s.n, unmeasured);
  return eliminate(s, measured, beta);
}

std::vector<std::uint8_t> weak_measure_all_but(QfeState& s,
                                               std::span<const int> unmeasured,
                                               RngStream& rng) {
  const std::vector<int> measured = complement(s.n, unmeasured);
  std::vector<std::uint8_t> outcomes(measured.size(), 0);
  std::vector<bool> done(measured.size(), false);

  // Measured qubits owning principal rows first: swap the column to the
  // back and fix its index bit with a fresh random value.
  for (std::size_t i = 0; i < measured.size(); ++i) {
    const int j = measured[i];
    const std::optional<int> c = s.principal_column_of_row(j);
    if (!c) continue;
    const int beta = rng.next_bit();
    reindex_swap_columns(s, *c, s.rank() - 1);
    fix_final_bit(s, beta ^ s.b[j]);
    outcomes[i] = static_cast<std::uint8_t>(beta);
    done[i] = true;
  }
  for (std::size_t i = 0; i < measured.size(); ++i) {
    if (!done[i]) {
      outcomes[i] = static_cast<std::uint8_t>(measure_z(s, measured[i], rng));
    }
  }
  return outcomes;
}

}  // namespace qfe
