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

#ifndef QFE_TOUCH_COUNTER_HPP
#define QFE_TOUCH_COUNTER_HPP

#include <cstdint>

namespace qfe {

/// Monotone counter of sparse-structure node visits and entry updates.
///
/// Every walk, insertion, deletion or in-place update of a chain node adds
/// one unit. Reads of maintained counts and of dense scalars are free. The
/// counter only decreases via an explicit reset.
class TouchCounter {
 public:
  void add(std::uint64_t k = 1) { count_ += k; }
  std::uint64_t value() const { return count_; }
  void reset() { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

}  // namespace qfe

#endif
