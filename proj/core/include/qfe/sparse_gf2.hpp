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

#ifndef QFE_SPARSE_GF2_HPP
#define QFE_SPARSE_GF2_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfe/touch_counter.hpp"

namespace qfe {

/// Sparse n x r matrix over GF(2).
///
/// Nonzero entries live in an arena of nodes threaded into one doubly linked
/// chain per row and one per column. Chains are kept sorted by the logical
/// index of the other coordinate, and per-line nonzero counts are maintained.
/// Rows and columns are addressed through an indirection table, so appending
/// or removing a line relabels indices without rewriting any node.
///
/// Not safe for concurrent mutation; exclusive access is assumed.
class SparseBinaryMatrix {
 public:
  SparseBinaryMatrix(int rows, int cols);

  int rows() const { return static_cast<int>(rorder_.size()); }
  int cols() const { return static_cast<int>(corder_.size()); }

  int get(int j, int k) const;
  void set(int j, int k, int v);
  void toggle(int j, int k);

  int row_count(int j) const {
    assert(j >= 0 && j < rows());
    return rlines_[rorder_[j]].count;
  }
  int col_count(int k) const {
    assert(k >= 0 && k < cols());
    return clines_[corder_[k]].count;
  }

  /// Visits the nonzero columns of row j in ascending order. One touch per
  /// node visited, i.e. exactly row_count(j) touches.
  template <class Fn>
  void for_each_in_row(int j, Fn fn) const {
    assert(j >= 0 && j < rows());
    for (std::int32_t it = rlines_[rorder_[j]].head; it != kNil;
         it = nodes_[it].rnext) {
      touches_.add();
      fn(cpos_[nodes_[it].pcol]);
    }
  }

  template <class Fn>
  void for_each_in_col(int k, Fn fn) const {
    assert(k >= 0 && k < cols());
    for (std::int32_t it = clines_[corder_[k]].head; it != kNil;
         it = nodes_[it].cnext) {
      touches_.add();
      fn(rpos_[nodes_[it].prow]);
    }
  }

  std::vector<int> row_cols(int j) const;
  std::vector<int> col_rows(int k) const;

  void append_col();
  void remove_col(int c);
  void append_row();
  void remove_row(int j);

  /// Column k ^= column c (entrywise XOR), c != k.
  void xor_col_into(int c, int k);

  /// Exchanges columns a and b. Implemented by relabelling the two column
  /// slots and repositioning the affected nodes inside their row chains.
  void swap_cols(int a, int b);

  std::uint64_t touches() const { return touches_.value(); }
  void reset_touches() { touches_.reset(); }

  /// Recomputes everything the chains and counts claim; returns the first
  /// discrepancy found. Test support, deliberately slow.
  std::optional<std::string> check_integrity() const;

 private:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    std::int32_t prow, pcol;
    std::int32_t rprev, rnext, cprev, cnext;
  };
  struct Line {
    std::int32_t head = kNil;
    std::int32_t tail = kNil;
    std::int32_t count = 0;
  };

  std::int32_t find_in_row(int j, int k) const;
  std::int32_t find_in_col(int j, int k) const;
  std::int32_t find(int j, int k) const;
  std::int32_t alloc_node(std::int32_t prow, std::int32_t pcol);
  void free_node(std::int32_t nd);
  void link_into_row(std::int32_t nd);
  void link_into_col(std::int32_t nd);
  void link_into_col_after(std::int32_t nd, std::int32_t after);
  void unlink_from_row(std::int32_t nd);
  void unlink_from_col(std::int32_t nd);
  void unlink_node(std::int32_t nd);
  void reposition_in_row(std::int32_t nd);
  std::int32_t take_line_slot(std::vector<Line>& lines,
                              std::vector<std::int32_t>& pos,
                              std::vector<std::int32_t>& free_slots);

  std::vector<Node> nodes_;
  std::int32_t free_nodes_ = kNil;
  std::vector<Line> rlines_, clines_;           // per physical slot
  std::vector<std::int32_t> rorder_, corder_;   // logical -> physical
  std::vector<std::int32_t> rpos_, cpos_;       // physical -> logical
  std::vector<std::int32_t> rfree_, cfree_;     // unused physical slots
  mutable TouchCounter touches_;
};

/// Sparse symmetric r x r integer matrix.
///
/// Off-diagonal entries are held once per unordered pair as an edge node
/// threaded into the chains of both endpoints (sorted by partner index);
/// an explicit diagonal slot exists for every index. Off-diagonals are
/// meaningful mod 2 and the diagonal mod 4, but arbitrary integer values may
/// be stored between reductions.
class SparseGramMatrix {
 public:
  explicit SparseGramMatrix(int dim);

  int dim() const { return static_cast<int>(order_.size()); }

  int get(int j, int k) const;
  void set_sym(int j, int k, int v);
  void add_sym(int j, int k, int dv);

  int diag(int c) const {
    assert(c >= 0 && c < dim());
    return diag_[order_[c]];
  }
  void set_diag(int c, int v) {
    assert(c >= 0 && c < dim());
    touches_.add();
    diag_[order_[c]] = v;
  }
  void add_diag(int c, int dv) {
    assert(c >= 0 && c < dim());
    touches_.add();
    diag_[order_[c]] += dv;
  }

  int offdiag_count(int c) const {
    assert(c >= 0 && c < dim());
    return lines_[order_[c]].count;
  }

  /// Visits off-diagonal nonzeros of row/column c as (partner, value),
  /// ascending by partner.
  template <class Fn>
  void for_each_offdiag(int c, Fn fn) const {
    assert(c >= 0 && c < dim());
    const std::int32_t pc = order_[c];
    for (std::int32_t it = lines_[pc].head; it != kNil; it = next_of(it, pc)) {
      touches_.add();
      fn(pos_[partner_of(it, pc)], edges_[it].value);
    }
  }

  std::vector<std::pair<int, int>> row_offdiag(int c) const;

  /// All stored entries of row/column c including the diagonal, ascending,
  /// as (index, value) with zeros skipped.
  std::vector<std::pair<int, int>> row_entries(int c) const;

  void append_dim();
  void remove_dim(int c);
  void swap_dims(int a, int b);

  /// Diagonal entry mod 4, off-diagonals of row/column c mod 2.
  void reduce_row_col(int c);

  std::uint64_t touches() const { return touches_.value(); }
  void reset_touches() { touches_.reset(); }

  std::optional<std::string> check_integrity() const;

 private:
  static constexpr std::int32_t kNil = -1;

  struct Edge {
    std::int32_t pa, pb;  // physical endpoints, pa != pb
    std::int32_t value;
    std::int32_t aprev, anext, bprev, bnext;
  };
  struct Line {
    std::int32_t head = kNil;
    std::int32_t count = 0;
  };

  std::int32_t partner_of(std::int32_t e, std::int32_t ph) const {
    const Edge& ed = edges_[e];
    return ed.pa == ph ? ed.pb : ed.pa;
  }
  std::int32_t next_of(std::int32_t e, std::int32_t ph) const {
    const Edge& ed = edges_[e];
    return ed.pa == ph ? ed.anext : ed.bnext;
  }
  std::int32_t& next_ref(std::int32_t e, std::int32_t ph) {
    Edge& ed = edges_[e];
    return ed.pa == ph ? ed.anext : ed.bnext;
  }
  std::int32_t& prev_ref(std::int32_t e, std::int32_t ph) {
    Edge& ed = edges_[e];
    return ed.pa == ph ? ed.aprev : ed.bprev;
  }

  std::int32_t find_edge(std::int32_t pj, std::int32_t pk) const;
  std::int32_t alloc_edge(std::int32_t pa, std::int32_t pb, int value);
  void free_edge(std::int32_t e);
  void link_endpoint(std::int32_t e, std::int32_t ph);
  void unlink_endpoint(std::int32_t e, std::int32_t ph);
  void reposition_endpoint(std::int32_t e, std::int32_t ph);
  void insert_edge(int j, int k, int value);

  std::vector<Edge> edges_;
  std::int32_t free_edges_ = kNil;
  std::vector<Line> lines_;               // per physical index
  std::vector<std::int32_t> diag_;        // per physical index
  std::vector<std::int32_t> order_;       // logical -> physical
  std::vector<std::int32_t> pos_;         // physical -> logical
  std::vector<std::int32_t> free_slots_;
  mutable TouchCounter touches_;
};

}  // namespace qfe

#endif
