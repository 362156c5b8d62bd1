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

#ifndef QFE_MEASURE_HPP
#define QFE_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "qfe/qfe_state.hpp"

namespace qfe {

/// Deterministic bit source with an explicit 64-bit seed. One bit is drawn
/// per random measurement outcome, at exactly the step the procedure needs
/// it; deterministic outcomes consume nothing.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  /// Stream for one shot of a run, decorrelated from other shots.
  static RngStream for_shot(std::uint64_t seed, std::uint64_t shot) {
    // splitmix64 over (seed, shot)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shot + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RngStream(z ^ (z >> 31));
  }

  /// Stream that always yields the given bit; used to probe both branches
  /// of an otherwise random outcome.
  static RngStream constant(int bit) {
    RngStream r(0);
    r.forced_ = bit;
    return r;
  }

  int next_bit() {
    ++consumed_;
    if (forced_ >= 0) return forced_;
    return static_cast<int>(gen_() & 1);
  }

  std::uint64_t bits_consumed() const { return consumed_; }

 private:
  std::mt19937_64 gen_;
  int forced_ = -1;
  std::uint64_t consumed_ = 0;
};

enum class Basis { X, Y, Z };

/// Single-qubit projective measurements. A deterministic outcome is found
/// and returned in O(1) without modifying the state; a random outcome draws
/// one bit from rng and leaves the state projected onto the outcome and
/// rescaled by sqrt(2), global phase included.
int measure_z(QfeState& s, int j, RngStream& rng);
int measure_x(QfeState& s, int j, RngStream& rng);
int measure_y(QfeState& s, int j, RngStream& rng);
int measure(QfeState& s, int j, Basis basis, RngStream& rng);

/// Read-only O(1) detection of a forced outcome; nullopt when the
/// measurement would be random.
std::optional<int> peek_deterministic(const QfeState& s, int j, Basis basis);

}  // namespace qfe

#endif
