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

#include "qfe/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <thread>

#include "qfe/batch.hpp"
#include "qfe/gates.hpp"

namespace qfe {

int Circuit::measurement_count() const {
  int count = 0;
  for (const auto& ins : ops) count += is_measurement(ins.op) ? 1 : 0;
  return count;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
};

const char* opcode_name(OpCode op) {
  switch (op) {
    case OpCode::X: return "X";
    case OpCode::Y: return "Y";
    case OpCode::Z: return "Z";
    case OpCode::H: return "H";
    case OpCode::S: return "S";
    case OpCode::SDG: return "SDG";
    case OpCode::CZ: return "CZ";
    case OpCode::CX: return "CX";
    case OpCode::CY: return "CY";
    case OpCode::MZ: return "MZ";
    case OpCode::MX: return "MX";
    case OpCode::MY: return "MY";
    case OpCode::MPP: return "MPP";
  }
  return "?";
}

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits a line into whitespace-separated tokens, honoring `#` comments.
std::vector<Token> tokenize_line(const std::string& raw, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < raw.size() && raw[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    }
    out.push_back(
        {raw.substr(start, i - start), line_no, static_cast<int>(start) + 1});
  }
  return out;
}

int parse_uint(const Token& tok, const char* what) {
  if (tok.text.empty() ||
      !std::all_of(tok.text.begin(), tok.text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError(tok.line, tok.column,
                     std::string("expected ") + what + ", got '" + tok.text +
                         "'");
  }
  errno = 0;
  const long long value = std::stoll(tok.text);
  if (value > (1 << 26)) {
    throw ParseError(tok.line, tok.column, std::string(what) + " too large");
  }
  return static_cast<int>(value);
}

void check_range(const Token& tok, int q, int n) {
  if (q < 0 || q >= n) {
    throw ParseError(tok.line, tok.column,
                     "qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(n) + " qubits");
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<Token> toks = tokenize_line(raw, line_no);
    if (toks.empty()) continue;
    const Token& head = toks[0];

    if (!have_header) {
      if (head.text != "QUBITS") {
        throw ParseError(head.line, head.column,
                         "expected 'QUBITS <n>' header, got '" + head.text +
                             "'");
      }
      if (toks.size() != 2) {
        throw ParseError(head.line, head.column,
                         "QUBITS takes exactly one argument");
      }
      circuit.n = parse_uint(toks[1], "qubit count");
      if (circuit.n < 1) {
        throw ParseError(toks[1].line, toks[1].column,
                         "qubit count must be at least 1");
      }
      have_header = true;
      continue;
    }

    Instruction ins;
    const std::string& m = head.text;
    auto expect_args = [&](std::size_t count) {
      if (toks.size() != count + 1) {
        throw ParseError(head.line, head.column,
                         m + " takes " + std::to_string(count) +
                             " argument(s), got " +
                             std::to_string(toks.size() - 1));
      }
    };
    auto one_qubit = [&](OpCode op) {
      expect_args(1);
      ins.op = op;
      ins.q0 = parse_uint(toks[1], "qubit index");
      check_range(toks[1], ins.q0, circuit.n);
    };
    auto two_qubit = [&](OpCode op) {
      expect_args(2);
      ins.op = op;
      ins.q0 = parse_uint(toks[1], "qubit index");
      ins.q1 = parse_uint(toks[2], "qubit index");
      check_range(toks[1], ins.q0, circuit.n);
      check_range(toks[2], ins.q1, circuit.n);
      if (ins.q0 == ins.q1) {
        throw ParseError(head.line, head.column,
                         m + ": identical control and target");
      }
    };

    if (m == "X") one_qubit(OpCode::X);
    else if (m == "Y") one_qubit(OpCode::Y);
    else if (m == "Z") one_qubit(OpCode::Z);
    else if (m == "H") one_qubit(OpCode::H);
    else if (m == "S") one_qubit(OpCode::S);
    else if (m == "SDG") one_qubit(OpCode::SDG);
    else if (m == "MZ") one_qubit(OpCode::MZ);
    else if (m == "MX") one_qubit(OpCode::MX);
    else if (m == "MY") one_qubit(OpCode::MY);
    else if (m == "CZ") two_qubit(OpCode::CZ);
    else if (m == "CX") two_qubit(OpCode::CX);
    else if (m == "CY") two_qubit(OpCode::CY);
    else if (m == "MPP") {
      if (toks.size() < 3) {
        throw ParseError(head.line, head.column,
                         "MPP needs an ancilla and at least one factor");
      }
      ins.op = OpCode::MPP;
      ins.q0 = parse_uint(toks[1], "ancilla index");
      check_range(toks[1], ins.q0, circuit.n);
      for (std::size_t t = 2; t < toks.size(); ++t) {
        const Token& fac = toks[t];
        PauliLetter letter;
        switch (fac.text[0]) {
          case 'X': letter = PauliLetter::X; break;
          case 'Y': letter = PauliLetter::Y; break;
          case 'Z': letter = PauliLetter::Z; break;
          default:
            throw ParseError(fac.line, fac.column,
                             "Pauli factor must start with X, Y or Z");
        }
        Token index_tok{fac.text.substr(1), fac.line, fac.column + 1};
        const int q = parse_uint(index_tok, "qubit index");
        check_range(index_tok, q, circuit.n);
        ins.pauli.factors.emplace_back(q, letter);
      }
      if (auto err = ins.pauli.validate(circuit.n)) {
        throw ParseError(head.line, head.column, *err);
      }
      for (auto [q, letter] : ins.pauli.factors) {
        (void)letter;
        if (q == ins.q0) {
          throw ParseError(head.line, head.column,
                           "MPP ancilla overlaps the observable support");
        }
      }
    } else {
      throw ParseError(head.line, head.column,
                       "unknown instruction '" + m + "'");
    }
    circuit.ops.push_back(std::move(ins));
  }
  if (!have_header) throw ParseError(1, 1, "missing 'QUBITS <n>' header");
  return circuit;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.n << "\n";
  for (const auto& ins : c.ops) {
    out << opcode_name(ins.op);
    if (ins.op == OpCode::MPP) {
      out << " " << ins.q0;
      for (auto [q, letter] : ins.pauli.factors) {
        out << " "
            << (letter == PauliLetter::X   ? 'X'
                : letter == PauliLetter::Y ? 'Y'
                                           : 'Z')
            << q;
      }
    } else {
      out << " " << ins.q0;
      if (ins.q1 >= 0) out << " " << ins.q1;
    }
    out << "\n";
  }
  return out.str();
}

std::uint64_t circuit_hash(const Circuit& c) {
  const std::string canon = format_circuit(c);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char byte : canon) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void run_shot(const Circuit& c, std::uint64_t seed, std::uint64_t shot,
              ShotRecord& record) {
  record.shot = shot;
  RngStream rng = RngStream::for_shot(seed, shot);
  QfeState state = QfeState::zero_state(c.n);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const Instruction& ins = c.ops[i];
    switch (ins.op) {
      case OpCode::X: apply_x(state, ins.q0); break;
      case OpCode::Y: apply_y(state, ins.q0); break;
      case OpCode::Z: apply_z(state, ins.q0); break;
      case OpCode::H: apply_h(state, ins.q0); break;
      case OpCode::S: apply_s(state, ins.q0); break;
      case OpCode::SDG: apply_sdg(state, ins.q0); break;
      case OpCode::CZ: apply_cz(state, ins.q0, ins.q1); break;
      case OpCode::CX: apply_cx(state, ins.q0, ins.q1); break;
      case OpCode::CY: apply_cy(state, ins.q0, ins.q1); break;
      case OpCode::MZ:
        record.entries.push_back({static_cast<int>(i), ins.q0, ins.op,
                                  measure_z(state, ins.q0, rng)});
        break;
      case OpCode::MX:
        record.entries.push_back({static_cast<int>(i), ins.q0, ins.op,
                                  measure_x(state, ins.q0, rng)});
        break;
      case OpCode::MY:
        record.entries.push_back({static_cast<int>(i), ins.q0, ins.op,
                                  measure_y(state, ins.q0, rng)});
        break;
      case OpCode::MPP:
        record.entries.push_back(
            {static_cast<int>(i), ins.q0, ins.op,
             measure_pauli(state, ins.pauli, ins.q0, rng)});
        break;
    }
  }
}

}  // namespace

RunResult run_circuit(const Circuit& c, std::uint64_t seed,
                      std::uint64_t shots, int threads) {
  RunResult result;
  result.seed = seed;
  result.circuit_hash = circuit_hash(c);
  result.shots.resize(shots);
  if (threads <= 1 || shots <= 1) {
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
      run_shot(c, seed, shot, result.shots[shot]);
    }
    return result;
  }
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(threads, shots));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t shot = w; shot < shots; shot += workers) {
        run_shot(c, seed, shot, result.shots[shot]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return result;
}

std::string serialize_records(const RunResult& result) {
  std::ostringstream out;
  out << "# seed " << result.seed << " circuit " << std::hex
      << result.circuit_hash << std::dec << "\n";
  for (const auto& shot : result.shots) {
    for (std::size_t i = 0; i < shot.entries.size(); ++i) {
      if (i) out << " ";
      out << shot.entries[i].outcome;
    }
    out << "\n";
  }
  return out.str();
}

RunResult load_records(std::string_view text, const Circuit& c) {
  RunResult result;
  result.circuit_hash = circuit_hash(c);
  std::vector<int> measuring;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (is_measurement(c.ops[i].op)) measuring.push_back(static_cast<int>(i));
  }

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!have_header) {
      std::istringstream head(raw);
      std::string hash_text, kw1, kw2;
      std::uint64_t seed = 0;
      char pound;
      if (!(head >> pound >> kw1 >> seed >> kw2 >> hash_text) ||
          pound != '#' || kw1 != "seed" || kw2 != "circuit") {
        throw ParseError(line_no, 1, "malformed record header");
      }
      result.seed = seed;
      if (std::stoull(hash_text, nullptr, 16) != result.circuit_hash) {
        throw ParseError(line_no, 1, "record header hash does not match");
      }
      have_header = true;
      continue;
    }
    ShotRecord shot;
    shot.shot = result.shots.size();
    std::istringstream vals(raw);
    int bit;
    std::size_t idx = 0;
    while (vals >> bit) {
      if (idx >= measuring.size() || (bit != 0 && bit != 1)) {
        throw ParseError(line_no, 1, "bad outcome list");
      }
      const Instruction& ins = c.ops[measuring[idx]];
      shot.entries.push_back({measuring[idx], ins.q0, ins.op, bit});
      ++idx;
    }
    if (idx != measuring.size()) {
      throw ParseError(line_no, 1,
                       "expected " + std::to_string(measuring.size()) +
                           " outcomes, got " + std::to_string(idx));
    }
    result.shots.push_back(std::move(shot));
  }
  if (!have_header) throw ParseError(1, 1, "missing record header");
  return result;
}

Circuit random_circuit(int n, int instruction_count, std::uint64_t seed,
                       bool with_measurements) {
  std::mt19937_64 gen(seed);
  auto pick = [&](int bound) {
    return static_cast<int>(gen() % static_cast<std::uint64_t>(bound));
  };
  Circuit c;
  c.n = n;
  const std::vector<OpCode> gates = {OpCode::X,  OpCode::Y,  OpCode::Z,
                                     OpCode::H,  OpCode::S,  OpCode::CZ,
                                     OpCode::CX, OpCode::CY};
  const std::vector<OpCode> meas = {OpCode::MZ, OpCode::MX, OpCode::MY};
  for (int i = 0; i < instruction_count; ++i) {
    Instruction ins;
    const bool measure =
        with_measurements && n >= 1 && pick(11) >= 8;  // 3 of 11 mnemonics
    if (measure) {
      ins.op = meas[pick(3)];
      ins.q0 = pick(n);
    } else {
      ins.op = gates[pick(static_cast<int>(gates.size()))];
      ins.q0 = pick(n);
      if (ins.op == OpCode::CZ || ins.op == OpCode::CX ||
          ins.op == OpCode::CY) {
        if (n < 2) {
          ins.op = OpCode::H;
        } else {
          do {
            ins.q1 = pick(n);
          } while (ins.q1 == ins.q0);
        }
      }
    }
    c.ops.push_back(std::move(ins));
  }
  return c;
}

}  // namespace qfe
