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

#ifndef QFE_CIRCUIT_HPP
#define QFE_CIRCUIT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/pauli_obs.hpp"

namespace qfe {

enum class OpCode { X, Y, Z, H, S, SDG, CZ, CX, CY, MZ, MX, MY, MPP };

inline bool is_measurement(OpCode op) {
  return op == OpCode::MZ || op == OpCode::MX || op == OpCode::MY ||
         op == OpCode::MPP;
}

struct Instruction {
  OpCode op;
  int q0 = -1;        // qubit / control / MPP ancilla
  int q1 = -1;        // target of two-qubit gates
  PauliString pauli;  // MPP payload
};

struct Circuit {
  int n = 0;
  std::vector<Instruction> ops;
  int measurement_count() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the plain-text circuit format:
///   - `#` starts a comment, blank lines are skipped
///   - first significant line must be `QUBITS <n>`
///   - one instruction per line: `X q`, `Y q`, `Z q`, `H q`, `S q`, `SDG q`,
///     `CZ a b`, `CX c t`, `CY c t`, `MZ q`, `MX q`, `MY q`,
///     `MPP anc <letter><q>...`  (e.g. `MPP 4 X0 Y1 Z2 X3`)
/// Qubit indices are 0-based decimal. Range and distinctness are validated.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse(format(parse(text))) == parse(text).
std::string format_circuit(const Circuit& c);

/// FNV-1a over the canonical text. Stable across runs and platforms.
std::uint64_t circuit_hash(const Circuit& c);

struct RecordEntry {
  int instruction;  // index into Circuit::ops
  int qubit;        // measured qubit, or the MPP ancilla
  OpCode op;
  int outcome;
  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct ShotRecord {
  std::uint64_t shot = 0;
  std::vector<RecordEntry> entries;
  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

struct RunResult {
  std::uint64_t seed = 0;
  std::uint64_t circuit_hash = 0;
  std::vector<ShotRecord> shots;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Weakly simulates the circuit: every shot starts from |0...0>, draws its
/// randomness from a stream derived from (seed, shot id), and records one
/// entry per measuring instruction in program order. Deterministic given
/// (circuit, seed, shots); `threads` > 1 parallelises over shots without
/// changing the result.
RunResult run_circuit(const Circuit& c, std::uint64_t seed,
                      std::uint64_t shots, int threads = 1);

/// One line per shot, outcomes as space-separated bits in program order,
/// preceded by a header comment carrying the seed and circuit hash.
std::string serialize_records(const RunResult& result);

/// Inverse of serialize_records, reattaching instruction metadata from the
/// circuit the records were produced with.
RunResult load_records(std::string_view text, const Circuit& c);

/// Uniformly random n-qubit circuit over the given instruction set; used by
/// the benchmark and cross-check harnesses. Deterministic in the seed.
Circuit random_circuit(int n, int instruction_count, std::uint64_t seed,
                       bool with_measurements = true);

}  // namespace qfe

#endif
