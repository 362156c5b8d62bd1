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

#include "qfe/sparse_gf2.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qfe {

// ---------------------------------------------------------------------------
// SparseBinaryMatrix
// ---------------------------------------------------------------------------

SparseBinaryMatrix::SparseBinaryMatrix(int rows, int cols) {
  assert(rows >= 0 && cols >= 0);
  rlines_.resize(rows);
  clines_.resize(cols);
  rorder_.resize(rows);
  corder_.resize(cols);
  rpos_.resize(rows);
  cpos_.resize(cols);
  for (int j = 0; j < rows; ++j) rorder_[j] = rpos_[j] = j;
  for (int k = 0; k < cols; ++k) corder_[k] = cpos_[k] = k;
}

std::int32_t SparseBinaryMatrix::alloc_node(std::int32_t prow,
                                            std::int32_t pcol) {
  std::int32_t nd;
  if (free_nodes_ != kNil) {
    nd = free_nodes_;
    free_nodes_ = nodes_[nd].rnext;
  } else {
    nd = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
  }
  nodes_[nd] = Node{prow, pcol, kNil, kNil, kNil, kNil};
  return nd;
}

void SparseBinaryMatrix::free_node(std::int32_t nd) {
  nodes_[nd].rnext = free_nodes_;
  free_nodes_ = nd;
}

std::int32_t SparseBinaryMatrix::find_in_row(int j, int k) const {
  const std::int32_t pr = rorder_[j];
  for (std::int32_t it = rlines_[pr].head; it != kNil; it = nodes_[it].rnext) {
    touches_.add();
    const int c = cpos_[nodes_[it].pcol];
    if (c == k) return it;
    if (c > k) return kNil;
  }
  return kNil;
}

std::int32_t SparseBinaryMatrix::find_in_col(int j, int k) const {
  const std::int32_t pc = corder_[k];
  for (std::int32_t it = clines_[pc].head; it != kNil; it = nodes_[it].cnext) {
    touches_.add();
    const int r = rpos_[nodes_[it].prow];
    if (r == j) return it;
    if (r > j) return kNil;
  }
  return kNil;
}

std::int32_t SparseBinaryMatrix::find(int j, int k) const {
  assert(j >= 0 && j < rows() && k >= 0 && k < cols());
  if (rlines_[rorder_[j]].count <= clines_[corder_[k]].count) {
    return find_in_row(j, k);
  }
  return find_in_col(j, k);
}

int SparseBinaryMatrix::get(int j, int k) const {
  return find(j, k) != kNil ? 1 : 0;
}

void SparseBinaryMatrix::link_into_row(std::int32_t nd) {
  Line& line = rlines_[nodes_[nd].prow];
  const int key = cpos_[nodes_[nd].pcol];
  line.count++;
  touches_.add();
  if (line.head == kNil) {
    line.head = line.tail = nd;
    return;
  }
  if (cpos_[nodes_[line.tail].pcol] < key) {  // append fast path
    nodes_[nd].rprev = line.tail;
    nodes_[line.tail].rnext = nd;
    line.tail = nd;
    return;
  }
  std::int32_t it = line.head;
  while (it != kNil && cpos_[nodes_[it].pcol] < key) {
    touches_.add();
    it = nodes_[it].rnext;
  }
  // insert before `it`
  nodes_[nd].rnext = it;
  nodes_[nd].rprev = nodes_[it].rprev;
  if (nodes_[it].rprev != kNil) {
    nodes_[nodes_[it].rprev].rnext = nd;
  } else {
    line.head = nd;
  }
  nodes_[it].rprev = nd;
}

void SparseBinaryMatrix::link_into_col(std::int32_t nd) {
  Line& line = clines_[nodes_[nd].pcol];
  const int key = rpos_[nodes_[nd].prow];
  line.count++;
  touches_.add();
  if (line.head == kNil) {
    line.head = line.tail = nd;
    return;
  }
  if (rpos_[nodes_[line.tail].prow] < key) {
    nodes_[nd].cprev = line.tail;
    nodes_[line.tail].cnext = nd;
    line.tail = nd;
    return;
  }
  std::int32_t it = line.head;
  while (it != kNil && rpos_[nodes_[it].prow] < key) {
    touches_.add();
    it = nodes_[it].cnext;
  }
  nodes_[nd].cnext = it;
  nodes_[nd].cprev = nodes_[it].cprev;
  if (nodes_[it].cprev != kNil) {
    nodes_[nodes_[it].cprev].cnext = nd;
  } else {
    line.head = nd;
  }
  nodes_[it].cprev = nd;
}

// Links nd into its column chain directly after node `after` (kNil = front).
void SparseBinaryMatrix::link_into_col_after(std::int32_t nd,
                                             std::int32_t after) {
  Line& line = clines_[nodes_[nd].pcol];
  line.count++;
  touches_.add();
  std::int32_t next = (after == kNil) ? line.head : nodes_[after].cnext;
  nodes_[nd].cprev = after;
  nodes_[nd].cnext = next;
  if (after != kNil) {
    nodes_[after].cnext = nd;
  } else {
    line.head = nd;
  }
  if (next != kNil) {
    nodes_[next].cprev = nd;
  } else {
    line.tail = nd;
  }
}

void SparseBinaryMatrix::unlink_from_row(std::int32_t nd) {
  Line& line = rlines_[nodes_[nd].prow];
  line.count--;
  touches_.add();
  const std::int32_t prev = nodes_[nd].rprev;
  const std::int32_t next = nodes_[nd].rnext;
  if (prev != kNil) {
    nodes_[prev].rnext = next;
  } else {
    line.head = next;
  }
  if (next != kNil) {
    nodes_[next].rprev = prev;
  } else {
    line.tail = prev;
  }
  nodes_[nd].rprev = nodes_[nd].rnext = kNil;
}

void SparseBinaryMatrix::unlink_from_col(std::int32_t nd) {
  Line& line = clines_[nodes_[nd].pcol];
  line.count--;
  touches_.add();
  const std::int32_t prev = nodes_[nd].cprev;
  const std::int32_t next = nodes_[nd].cnext;
  if (prev != kNil) {
    nodes_[prev].cnext = next;
  } else {
    line.head = next;
  }
  if (next != kNil) {
    nodes_[next].cprev = prev;
  } else {
    line.tail = prev;
  }
  nodes_[nd].cprev = nodes_[nd].cnext = kNil;
}

void SparseBinaryMatrix::unlink_node(std::int32_t nd) {
  unlink_from_row(nd);
  unlink_from_col(nd);
  free_node(nd);
}

void SparseBinaryMatrix::set(int j, int k, int v) {
  assert(j >= 0 && j < rows() && k >= 0 && k < cols());
  assert(v == 0 || v == 1);
  const std::int32_t nd = find(j, k);
  if (v == 0) {
    if (nd != kNil) unlink_node(nd);
    return;
  }
  if (nd != kNil) return;
  const std::int32_t fresh = alloc_node(rorder_[j], corder_[k]);
  link_into_row(fresh);
  link_into_col(fresh);
}

void SparseBinaryMatrix::toggle(int j, int k) {
  const std::int32_t nd = find(j, k);
  if (nd != kNil) {
    unlink_node(nd);
  } else {
    const std::int32_t fresh = alloc_node(rorder_[j], corder_[k]);
    link_into_row(fresh);
    link_into_col(fresh);
  }
}

std::vector<int> SparseBinaryMatrix::row_cols(int j) const {
  std::vector<int> out;
  out.reserve(row_count(j));
  for_each_in_row(j, [&](int k) { out.push_back(k); });
  return out;
}

std::vector<int> SparseBinaryMatrix::col_rows(int k) const {
  std::vector<int> out;
  out.reserve(col_count(k));
  for_each_in_col(k, [&](int j) { out.push_back(j); });
  return out;
}

std::int32_t SparseBinaryMatrix::take_line_slot(
    std::vector<Line>& lines, std::vector<std::int32_t>& pos,
    std::vector<std::int32_t>& free_slots) {
  std::int32_t slot;
  if (!free_slots.empty()) {
    slot = free_slots.back();
    free_slots.pop_back();
    lines[slot] = Line{};
  } else {
    slot = static_cast<std::int32_t>(lines.size());
    lines.emplace_back();
    pos.push_back(kNil);
  }
  return slot;
}

void SparseBinaryMatrix::append_col() {
  const std::int32_t slot = take_line_slot(clines_, cpos_, cfree_);
  cpos_[slot] = cols();
  corder_.push_back(slot);
}

void SparseBinaryMatrix::remove_col(int c) {
  assert(c >= 0 && c < cols());
  const std::int32_t pc = corder_[c];
  std::int32_t it = clines_[pc].head;
  while (it != kNil) {
    touches_.add();
    const std::int32_t next = nodes_[it].cnext;
    unlink_from_row(it);
    free_node(it);
    it = next;
  }
  clines_[pc] = Line{};
  cpos_[pc] = kNil;
  cfree_.push_back(pc);
  corder_.erase(corder_.begin() + c);
  for (int k = c; k < cols(); ++k) cpos_[corder_[k]] = k;
}

void SparseBinaryMatrix::append_row() {
  const std::int32_t slot = take_line_slot(rlines_, rpos_, rfree_);
  rpos_[slot] = rows();
  rorder_.push_back(slot);
}

void SparseBinaryMatrix::remove_row(int j) {
  assert(j >= 0 && j < rows());
  const std::int32_t pr = rorder_[j];
  std::int32_t it = rlines_[pr].head;
  while (it != kNil) {
    touches_.add();
    const std::int32_t next = nodes_[it].rnext;
    unlink_from_col(it);
    free_node(it);
    it = next;
  }
  rlines_[pr] = Line{};
  rpos_[pr] = kNil;
  rfree_.push_back(pr);
  rorder_.erase(rorder_.begin() + j);
  for (int h = j; h < rows(); ++h) rpos_[rorder_[h]] = h;
}

void SparseBinaryMatrix::xor_col_into(int c, int k) {
  assert(c >= 0 && c < cols() && k >= 0 && k < cols());
  assert(c != k);
  const std::int32_t pc = corder_[c];
  const std::int32_t pk = corder_[k];
  std::int32_t ic = clines_[pc].head;
  std::int32_t ik = clines_[pk].head;
  std::int32_t finger = kNil;  // last target-column node at a smaller row
  while (ic != kNil) {
    touches_.add();
    const int jrow = rpos_[nodes_[ic].prow];
    while (ik != kNil && rpos_[nodes_[ik].prow] < jrow) {
      touches_.add();
      finger = ik;
      ik = nodes_[ik].cnext;
    }
    if (ik != kNil && rpos_[nodes_[ik].prow] == jrow) {
      const std::int32_t gone = ik;
      ik = nodes_[ik].cnext;
      unlink_node(gone);
    } else {
      const std::int32_t fresh = alloc_node(nodes_[ic].prow, pk);
      link_into_col_after(fresh, finger);
      link_into_row(fresh);
      finger = fresh;
    }
    ic = nodes_[ic].cnext;
  }
}

// Moves a node whose column label just changed back to its sorted position
// inside its row chain.
void SparseBinaryMatrix::reposition_in_row(std::int32_t nd) {
  const int key = cpos_[nodes_[nd].pcol];
  const std::int32_t prev = nodes_[nd].rprev;
  const std::int32_t next = nodes_[nd].rnext;
  const bool ok_left = (prev == kNil) || (cpos_[nodes_[prev].pcol] < key);
  const bool ok_right = (next == kNil) || (key < cpos_[nodes_[next].pcol]);
  if (ok_left && ok_right) return;
  unlink_from_row(nd);
  link_into_row(nd);
}

void SparseBinaryMatrix::swap_cols(int a, int b) {
  assert(a >= 0 && a < cols() && b >= 0 && b < cols());
  if (a == b) return;
  const std::int32_t pa = corder_[a];
  const std::int32_t pb = corder_[b];
  std::vector<std::int32_t> moved;
  moved.reserve(clines_[pa].count + clines_[pb].count);
  for (std::int32_t it = clines_[pa].head; it != kNil; it = nodes_[it].cnext) {
    touches_.add();
    moved.push_back(it);
  }
  for (std::int32_t it = clines_[pb].head; it != kNil; it = nodes_[it].cnext) {
    touches_.add();
    moved.push_back(it);
  }
  std::swap(corder_[a], corder_[b]);
  cpos_[pa] = b;
  cpos_[pb] = a;
  for (std::int32_t nd : moved) reposition_in_row(nd);
}

std::optional<std::string> SparseBinaryMatrix::check_integrity() const {
  std::vector<std::pair<int, int>> from_rows, from_cols;
  for (int j = 0; j < rows(); ++j) {
    int count = 0;
    int last = -1;
    for (std::int32_t it = rlines_[rorder_[j]].head; it != kNil;
         it = nodes_[it].rnext) {
      const int k = cpos_[nodes_[it].pcol];
      if (k <= last) {
        return "row " + std::to_string(j) + " chain not strictly ascending";
      }
      last = k;
      from_rows.emplace_back(j, k);
      ++count;
      if (nodes_[it].rnext == kNil && rlines_[rorder_[j]].tail != it) {
        return "row " + std::to_string(j) + " tail pointer stale";
      }
    }
    if (count != row_count(j)) {
      return "row " + std::to_string(j) + " count mismatch";
    }
  }
  for (int k = 0; k < cols(); ++k) {
    int count = 0;
    int last = -1;
    for (std::int32_t it = clines_[corder_[k]].head; it != kNil;
         it = nodes_[it].cnext) {
      const int j = rpos_[nodes_[it].prow];
      if (j <= last) {
        return "col " + std::to_string(k) + " chain not strictly ascending";
      }
      last = j;
      from_cols.emplace_back(j, k);
      ++count;
      if (nodes_[it].cnext == kNil && clines_[corder_[k]].tail != it) {
        return "col " + std::to_string(k) + " tail pointer stale";
      }
    }
    if (count != col_count(k)) {
      return "col " + std::to_string(k) + " count mismatch";
    }
  }
  std::sort(from_rows.begin(), from_rows.end());
  std::sort(from_cols.begin(), from_cols.end());
  if (from_rows != from_cols) return std::string("row/column chains disagree");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SparseGramMatrix
// ---------------------------------------------------------------------------

SparseGramMatrix::SparseGramMatrix(int dim) {
  assert(dim >= 0);
  lines_.resize(dim);
  diag_.assign(dim, 0);
  order_.resize(dim);
  pos_.resize(dim);
  for (int c = 0; c < dim; ++c) order_[c] = pos_[c] = c;
}

std::int32_t SparseGramMatrix::find_edge(std::int32_t pj,
                                         std::int32_t pk) const {
  const int key = pos_[pk];
  for (std::int32_t it = lines_[pj].head; it != kNil; it = next_of(it, pj)) {
    touches_.add();
    const int partner = pos_[partner_of(it, pj)];
    if (partner == key) return it;
    if (partner > key) return kNil;
  }
  return kNil;
}

std::int32_t SparseGramMatrix::alloc_edge(std::int32_t pa, std::int32_t pb,
                                          int value) {
  std::int32_t e;
  if (free_edges_ != kNil) {
    e = free_edges_;
    free_edges_ = edges_[e].anext;
  } else {
    e = static_cast<std::int32_t>(edges_.size());
    edges_.emplace_back();
  }
  edges_[e] = Edge{pa, pb, value, kNil, kNil, kNil, kNil};
  return e;
}

void SparseGramMatrix::free_edge(std::int32_t e) {
  edges_[e].anext = free_edges_;
  free_edges_ = e;
}

void SparseGramMatrix::link_endpoint(std::int32_t e, std::int32_t ph) {
  Line& line = lines_[ph];
  line.count++;
  touches_.add();
  const int key = pos_[partner_of(e, ph)];
  std::int32_t prev = kNil;
  std::int32_t it = line.head;
  while (it != kNil && pos_[partner_of(it, ph)] < key) {
    touches_.add();
    prev = it;
    it = next_of(it, ph);
  }
  prev_ref(e, ph) = prev;
  next_ref(e, ph) = it;
  if (prev != kNil) {
    next_ref(prev, ph) = e;
  } else {
    line.head = e;
  }
  if (it != kNil) prev_ref(it, ph) = e;
}

void SparseGramMatrix::unlink_endpoint(std::int32_t e, std::int32_t ph) {
  Line& line = lines_[ph];
  line.count--;
  touches_.add();
  const std::int32_t prev = prev_ref(e, ph);
  const std::int32_t next = next_of(e, ph);
  if (prev != kNil) {
    next_ref(prev, ph) = next;
  } else {
    line.head = next;
  }
  if (next != kNil) prev_ref(next, ph) = prev;
  prev_ref(e, ph) = kNil;
  next_ref(e, ph) = kNil;
}

void SparseGramMatrix::reposition_endpoint(std::int32_t e, std::int32_t ph) {
  const int key = pos_[partner_of(e, ph)];
  const std::int32_t prev = prev_ref(e, ph);
  const std::int32_t next = next_of(e, ph);
  const bool ok_left = (prev == kNil) || (pos_[partner_of(prev, ph)] < key);
  const bool ok_right = (next == kNil) || (key < pos_[partner_of(next, ph)]);
  if (ok_left && ok_right) return;
  unlink_endpoint(e, ph);
  link_endpoint(e, ph);
}

void SparseGramMatrix::insert_edge(int j, int k, int value) {
  const std::int32_t e = alloc_edge(order_[j], order_[k], value);
  link_endpoint(e, order_[j]);
  link_endpoint(e, order_[k]);
}

int SparseGramMatrix::get(int j, int k) const {
  assert(j >= 0 && j < dim() && k >= 0 && k < dim());
  if (j == k) return diag_[order_[j]];
  const std::int32_t pj = order_[j];
  const std::int32_t pk = order_[k];
  const std::int32_t e = lines_[pj].count <= lines_[pk].count
                             ? find_edge(pj, pk)
                             : find_edge(pk, pj);
  return e == kNil ? 0 : edges_[e].value;
}

void SparseGramMatrix::set_sym(int j, int k, int v) {
  assert(j >= 0 && j < dim() && k >= 0 && k < dim());
  if (j == k) {
    set_diag(j, v);
    return;
  }
  const std::int32_t pj = order_[j];
  const std::int32_t pk = order_[k];
  const std::int32_t e = lines_[pj].count <= lines_[pk].count
                             ? find_edge(pj, pk)
                             : find_edge(pk, pj);
  if (v == 0) {
    if (e != kNil) {
      unlink_endpoint(e, edges_[e].pa);
      unlink_endpoint(e, edges_[e].pb);
      free_edge(e);
    }
    return;
  }
  if (e != kNil) {
    touches_.add();
    edges_[e].value = v;
    return;
  }
  insert_edge(j, k, v);
}

void SparseGramMatrix::add_sym(int j, int k, int dv) {
  if (dv == 0) return;
  if (j == k) {
    add_diag(j, dv);
    return;
  }
  const std::int32_t pj = order_[j];
  const std::int32_t pk = order_[k];
  const std::int32_t e = lines_[pj].count <= lines_[pk].count
                             ? find_edge(pj, pk)
                             : find_edge(pk, pj);
  if (e == kNil) {
    insert_edge(j, k, dv);
    return;
  }
  touches_.add();
  edges_[e].value += dv;
  if (edges_[e].value == 0) {
    unlink_endpoint(e, edges_[e].pa);
    unlink_endpoint(e, edges_[e].pb);
    free_edge(e);
  }
}

std::vector<std::pair<int, int>> SparseGramMatrix::row_offdiag(int c) const {
  std::vector<std::pair<int, int>> out;
  out.reserve(offdiag_count(c));
  for_each_offdiag(c, [&](int k, int v) { out.emplace_back(k, v); });
  return out;
}

std::vector<std::pair<int, int>> SparseGramMatrix::row_entries(int c) const {
  std::vector<std::pair<int, int>> out = row_offdiag(c);
  if (diag(c) != 0) {
    auto it = std::lower_bound(
        out.begin(), out.end(), c,
        [](const std::pair<int, int>& e, int idx) { return e.first < idx; });
    out.insert(it, {c, diag(c)});
  }
  return out;
}

void SparseGramMatrix::append_dim() {
  std::int32_t slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
    lines_[slot] = Line{};
    diag_[slot] = 0;
  } else {
    slot = static_cast<std::int32_t>(lines_.size());
    lines_.emplace_back();
    diag_.push_back(0);
    pos_.push_back(kNil);
  }
  pos_[slot] = dim();
  order_.push_back(slot);
}

void SparseGramMatrix::remove_dim(int c) {
  assert(c >= 0 && c < dim());
  const std::int32_t pc = order_[c];
  std::int32_t it = lines_[pc].head;
  while (it != kNil) {
    touches_.add();
    const std::int32_t next = next_of(it, pc);
    unlink_endpoint(it, partner_of(it, pc));
    // no need to unlink from pc's own chain, the whole line is dropped
    free_edge(it);
    it = next;
  }
  lines_[pc] = Line{};
  diag_[pc] = 0;
  pos_[pc] = kNil;
  free_slots_.push_back(pc);
  order_.erase(order_.begin() + c);
  for (int k = c; k < dim(); ++k) pos_[order_[k]] = k;
}

void SparseGramMatrix::swap_dims(int a, int b) {
  assert(a >= 0 && a < dim() && b >= 0 && b < dim());
  if (a == b) return;
  const std::int32_t pa = order_[a];
  const std::int32_t pb = order_[b];
  std::vector<std::pair<std::int32_t, std::int32_t>> moved;  // (edge, endpoint)
  for (std::int32_t it = lines_[pa].head; it != kNil; it = next_of(it, pa)) {
    touches_.add();
    moved.emplace_back(it, partner_of(it, pa));
  }
  for (std::int32_t it = lines_[pb].head; it != kNil; it = next_of(it, pb)) {
    touches_.add();
    moved.emplace_back(it, partner_of(it, pb));
  }
  std::swap(order_[a], order_[b]);
  pos_[pa] = b;
  pos_[pb] = a;
  // Every edge incident to a or b may now sit out of order in the chain of
  // its *other* endpoint; the edge between a and b appears twice and gets
  // repositioned in both chains.
  for (auto [e, endpoint] : moved) reposition_endpoint(e, endpoint);
}

void SparseGramMatrix::reduce_row_col(int c) {
  assert(c >= 0 && c < dim());
  const std::int32_t pc = order_[c];
  diag_[pc] = ((diag_[pc] % 4) + 4) % 4;
  touches_.add();
  std::int32_t it = lines_[pc].head;
  while (it != kNil) {
    touches_.add();
    const std::int32_t next = next_of(it, pc);
    const int reduced = ((edges_[it].value % 2) + 2) % 2;
    if (reduced == 0) {
      unlink_endpoint(it, edges_[it].pa);
      unlink_endpoint(it, edges_[it].pb);
      free_edge(it);
    } else {
      edges_[it].value = reduced;
    }
    it = next;
  }
}

std::optional<std::string> SparseGramMatrix::check_integrity() const {
  std::vector<std::pair<std::pair<int, int>, int>> seen;
  for (int c = 0; c < dim(); ++c) {
    const std::int32_t pc = order_[c];
    int count = 0;
    int last = -1;
    for (std::int32_t it = lines_[pc].head; it != kNil; it = next_of(it, pc)) {
      const int partner = pos_[partner_of(it, pc)];
      if (partner == c) {
        return "self-edge stored at index " + std::to_string(c);
      }
      if (partner <= last) {
        return "chain " + std::to_string(c) + " not strictly ascending";
      }
      last = partner;
      if (edges_[it].value == 0) {
        return "zero-valued edge stored at " + std::to_string(c);
      }
      seen.push_back({{std::min(c, partner), std::max(c, partner)},
                      edges_[it].value});
      ++count;
    }
    if (count != offdiag_count(c)) {
      return "offdiag count mismatch at " + std::to_string(c);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i + 1 < seen.size(); i += 2) {
    if (seen[i] != seen[i + 1]) return std::string("edge symmetry broken");
  }
  if (seen.size() % 2 != 0) return std::string("edge symmetry broken");
  return std::nullopt;
}

}  // namespace qfe
