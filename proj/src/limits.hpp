// Copyright 2026 The lmax-sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace lmax {

/// Resource caps threaded through the solvers. Both are checked up front so
/// oversized requests fail predictably instead of thrashing.
struct Limits {
  /// Total dp table budget across all retained layers, in bits.
  std::int64_t memory_cap_bits = std::int64_t{1} << 31;
  /// Maximum number of assignments the brute-force oracles may enumerate.
  std::int64_t enum_cap = 20'000'000;
};

}  // namespace lmax
