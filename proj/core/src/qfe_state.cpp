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

#include "qfe/qfe_state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qfe {

QfeState QfeState::basis_state(const std::vector<std::uint8_t>& bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1) {
    throw std::invalid_argument("basis_state requires at least one qubit");
  }
  QfeState s(n, SparseBinaryMatrix(n, 0), SparseGramMatrix(0));
  s.b = bits;
  return s;
}

QfeState QfeState::zero_state(int n) {
  return basis_state(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

std::optional<int> QfeState::principal_column_of_row(int j) const {
  if (A.row_count(j) != 1) return std::nullopt;
  int c = -1;
  A.for_each_in_row(j, [&](int k) { c = k; });
  if (c >= 0 && c < static_cast<int>(p.size()) && p[c] == j) return c;
  return std::nullopt;
}

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
  int rank = 0;
  const int words = (ncols + 63) / 64;
  for (int col = 0; col < ncols; ++col) {
    const int w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][w] & mask) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && (rows[i][w] & mask)) {
        for (int t = 0; t < words; ++t) rows[i][t] ^= rows[rank][t];
      }
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

std::optional<std::string> QfeState::validate() const {
  const int r = rank();
  if (n < 1) return std::string("n must be positive");
  if (A.rows() != n) return std::string("A row count != n");
  if (Q.dim() != r) return std::string("Q dimension != rank");
  if (static_cast<int>(b.size()) != n) return std::string("b length != n");
  if (static_cast<int>(p.size()) != r) return std::string("p length != rank");
  if (g < 0 || g > 7) {
    return "g = " + std::to_string(g) + " outside {0..7}";
  }
  if (auto err = A.check_integrity()) return "A: " + *err;
  if (auto err = Q.check_integrity()) return "Q: " + *err;

  for (int c = 0; c < r; ++c) {
    const int j = p[c];
    if (j < 0 || j >= n) {
      return "p(" + std::to_string(c) + ") out of range";
    }
    if (A.row_count(j) != 1 || A.get(j, c) != 1) {
      return "principal row not unit: p(" + std::to_string(c) + ") = " +
             std::to_string(j);
    }
  }
  for (int c = 0; c < r; ++c) {
    if (A.col_count(c) == 0) {
      return "column " + std::to_string(c) + " of A is zero";
    }
  }
  for (int c = 0; c < r; ++c) {
    const int d = Q.diag(c);
    if (d < 0 || d > 3) {
      return "Q diagonal " + std::to_string(c) + " = " + std::to_string(d) +
             " outside {0..3}";
    }
    bool bad = false;
    Q.for_each_offdiag(c, [&](int, int v) { bad = bad || v != 1; });
    if (bad) {
      return "Q off-diagonal in row " + std::to_string(c) + " outside {0,1}";
    }
  }
  // Full-rank check from scratch; principal row form implies it, but the
  // contract is to verify rather than trust.
  const int words = (r + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bitrows(
      n, std::vector<std::uint64_t>(std::max(words, 1), 0));
  for (int j = 0; j < n; ++j) {
    A.for_each_in_row(j, [&](int k) {
      bitrows[j][k / 64] |= std::uint64_t{1} << (k % 64);
    });
  }
  if (gf2_rank(std::move(bitrows), r) != r) {
    return std::string("rank(A) != column count");
  }
  return std::nullopt;
}

std::vector<std::complex<double>> QfeState::amplitudes(int cap) const {
  const int r = rank();
  if (r > cap) throw ExpansionCapExceeded(r, cap);
  if (n > 28) {
    throw std::invalid_argument("amplitude expansion limited to n <= 28");
  }

  std::vector<int> qdense(static_cast<std::size_t>(r) * r, 0);
  for (int j = 0; j < r; ++j) {
    qdense[static_cast<std::size_t>(j) * r + j] = Q.diag(j);
    Q.for_each_offdiag(j, [&](int k, int v) {
      qdense[static_cast<std::size_t>(j) * r + k] = v;
    });
  }
  std::vector<std::uint64_t> colmask(r, 0);
  std::uint64_t bmask = 0;
  for (int j = 0; j < n; ++j) {
    if (b[j]) bmask |= std::uint64_t{1} << j;
    A.for_each_in_row(j, [&](int k) { colmask[k] |= std::uint64_t{1} << j; });
  }

  const double tau_angle = std::numbers::pi / 4.0;
  const std::complex<double> scale =
      std::polar(std::pow(2.0, -0.5 * r), tau_angle * g);
  const std::complex<double> ipow[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  std::vector<std::complex<double>> amps(std::size_t{1} << n,
                                         std::complex<double>(0, 0));
  // Gray-code walk over the index vectors: one bit flip per step keeps the
  // phase and basis-index updates at O(r).
  std::uint64_t gray = 0;
  std::uint64_t index = bmask;
  int phase = 0;
  amps[index] += scale * ipow[0];
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t next_gray = i ^ (i >> 1);
    const int t = std::countr_zero(gray ^ next_gray);
    const bool turned_on = (next_gray >> t) & 1;
    int delta = qdense[static_cast<std::size_t>(t) * r + t];
    for (int k = 0; k < r; ++k) {
      if (k != t && ((next_gray >> k) & 1)) {
        delta += 2 * qdense[static_cast<std::size_t>(t) * r + k];
      }
    }
    phase = mod4(phase + (turned_on ? delta : -delta));
    index ^= colmask[t];
    gray = next_gray;
    amps[index] += scale * ipow[phase];
  }
  return amps;
}

std::string QfeState::debug_dump() const {
  std::ostringstream out;
  out << "n " << n << "\n";
  out << "r " << rank() << "\n";
  out << "g " << g << "\n";
  out << "b ";
  for (int j = 0; j < n; ++j) out << int(b[j]);
  out << "\n";
  for (int j = 0; j < n; ++j) {
    A.for_each_in_row(j, [&](int k) { out << "A " << j << " " << k << "\n"; });
  }
  for (int c = 0; c < rank(); ++c) {
    for (auto [k, v] : Q.row_entries(c)) {
      if (k >= c) out << "Q " << c << " " << k << " " << v << "\n";
    }
  }
  out << "p";
  for (int c = 0; c < rank(); ++c) out << " " << p[c];
  out << "\n";
  return out.str();
}

}  // namespace qfe
