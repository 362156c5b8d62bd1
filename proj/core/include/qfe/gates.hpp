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

#ifndef QFE_GATES_HPP
#define QFE_GATES_HPP

#include "qfe/qfe_state.hpp"

namespace qfe {

// Unitary Clifford gates on a quadratic form expansion. Every procedure
// tracks the global phase exactly: the resulting representation expands to
// U|psi> with no phase quotient. Two-qubit gates reject equal operands.

void apply_x(QfeState& s, int j);
void apply_y(QfeState& s, int j);
void apply_z(QfeState& s, int j);
void apply_s(QfeState& s, int j);
void apply_sdg(QfeState& s, int j);  // S.S.S
void apply_h(QfeState& s, int j);
void apply_cz(QfeState& s, int j, int k);
void apply_cx(QfeState& s, int control, int target);
void apply_cy(QfeState& s, int control, int target);  // (S (x) I) CX CZ

}  // namespace qfe

#endif
